#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hypheat {

/// Minkowski bilinear form -a0*b0 + sum_i ai*bi.
double minkowski_inner(std::span<const double> a, std::span<const double> b);

/// A point of H^n in the hyperboloid model, stored as n+1 Minkowski
/// coordinates with <x,x> = -1 and x0 >= 1.
class HyperPoint {
 public:
  /// Validates and renormalizes. Coordinates whose Minkowski norm is off
  /// from -1 by more than `tolerance` (relative to x0^2) are rejected.
  explicit HyperPoint(std::vector<double> coords, double tolerance = 1e-8);

  /// The base point (1, 0, ..., 0) of H^dim.
  static HyperPoint origin(int dim);

  /// Point at geodesic distance `radius` from the origin in the direction of
  /// the (not necessarily normalized) spatial vector `direction`.
  static HyperPoint from_polar(std::span<const double> direction, double radius);

  int dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

struct TangentVector {
  HyperPoint base;
  std::vector<double> components;

  /// Squared length; the Minkowski form is positive definite on tangent spaces.
  double norm_sq() const { return minkowski_inner(components, components); }
};

double distance(const HyperPoint& x, const HyperPoint& y);

/// Unit gradient at x of the function d(., y). Throws DomainError when x == y.
TangentVector grad_distance(const HyperPoint& x, const HyperPoint& y);

/// Deterministic point within `radius_bound` of the origin: uniform direction,
/// radius uniform on [0, radius_bound].
HyperPoint random_point(int dim, double radius_bound, std::uint64_t seed);
HyperPoint random_point(int dim, double radius_bound, std::mt19937_64& rng);

}  // namespace hypheat
