#include "hypheat/geometry.hpp"

#include <cmath>
#include <string>

#include "hypheat/errors.hpp"

namespace hypheat {

namespace {

// Rounding band below cosh(d) = 1 that is clamped instead of rejected.
constexpr double kClampBand = 1e-9;

void require_same_dim(const HyperPoint& x, const HyperPoint& y) {
  if (x.dim() != y.dim()) {
    throw UsageError("dimension mismatch: H^" + std::to_string(x.dim()) + " vs H^" +
                     std::to_string(y.dim()));
  }
}

// -<x,y>, validated as a cosh of a distance.
double cosh_distance(const HyperPoint& x, const HyperPoint& y) {
  const double c = -minkowski_inner(x.coords(), y.coords());
  if (c < 1.0 - kClampBand * std::max(1.0, x[0] * y[0])) {
    throw InvalidPointError("-<x,y> = " + std::to_string(c) + " is below 1");
  }
  return std::max(c, 1.0);
}

}  // namespace

double minkowski_inner(std::span<const double> a, std::span<const double> b) {
  double s = -a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

HyperPoint::HyperPoint(std::vector<double> coords, double tolerance)
    : coords_(std::move(coords)) {
  if (coords_.size() < 3) throw UsageError("HyperPoint needs dimension >= 2");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InvalidPointError("non-finite HyperPoint coordinate");
  }
  if (coords_[0] <= 0.0) throw InvalidPointError("HyperPoint must lie on the upper sheet");
  const double q = -minkowski_inner(coords_, coords_);
  if (std::abs(q - 1.0) > tolerance * coords_[0] * coords_[0]) {
    throw InvalidPointError("Minkowski norm " + std::to_string(-q) + " is not -1");
  }
  const double scale = 1.0 / std::sqrt(q);
  for (double& c : coords_) c *= scale;
  // Spatial part is authoritative; x0 is recomputed so that x0 >= 1 exactly.
  double spatial = 0.0;
  for (std::size_t i = 1; i < coords_.size(); ++i) spatial += coords_[i] * coords_[i];
  coords_[0] = std::sqrt(1.0 + spatial);
}

HyperPoint HyperPoint::origin(int dim) {
  if (dim < 2) throw UsageError("dimension must be >= 2");
  std::vector<double> c(static_cast<std::size_t>(dim) + 1, 0.0);
  c[0] = 1.0;
  return HyperPoint(std::move(c));
}

HyperPoint HyperPoint::from_polar(std::span<const double> direction, double radius) {
  double norm = 0.0;
  for (double d : direction) norm += d * d;
  norm = std::sqrt(norm);
  if (norm == 0.0 || radius < 0.0) throw UsageError("from_polar: bad direction or radius");
  std::vector<double> c(direction.size() + 1);
  c[0] = std::cosh(radius);
  const double s = std::sinh(radius) / norm;
  for (std::size_t i = 0; i < direction.size(); ++i) c[i + 1] = s * direction[i];
  return HyperPoint(std::move(c));
}

double distance(const HyperPoint& x, const HyperPoint& y) {
  require_same_dim(x, y);
  const double c = cosh_distance(x, y);
  if (c >= 2.0) return std::acosh(c);
  // Near the diagonal arccosh loses half the digits; use the chord instead:
  // <x-y, x-y> = 2(cosh d - 1) = 4 sinh^2(d/2).
  double chord_sq = 0.0;
  const auto a = x.coords();
  const auto b = y.coords();
  chord_sq -= (a[0] - b[0]) * (a[0] - b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) chord_sq += (a[i] - b[i]) * (a[i] - b[i]);
  return 2.0 * std::asinh(0.5 * std::sqrt(std::max(chord_sq, 0.0)));
}

TangentVector grad_distance(const HyperPoint& x, const HyperPoint& y) {
  require_same_dim(x, y);
  const double d = distance(x, y);
  if (d == 0.0) throw DomainError("grad_distance: coincident points");
  const double c = cosh_distance(x, y);
  const double inv_s = 1.0 / std::sinh(d);
  std::vector<double> g(x.coords().size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (c * x[i] - y[i]) * inv_s;
  // Project out the normal component left by rounding so <g, x> = 0.
  const double normal = minkowski_inner(g, x.coords());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += normal * x[i];
  return TangentVector{x, std::move(g)};
}

HyperPoint random_point(int dim, double radius_bound, std::mt19937_64& rng) {
  if (dim < 2) throw UsageError("random_point: dim must be >= 2");
  if (!(radius_bound > 0.0)) throw UsageError("random_point: radius_bound must be > 0");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> dir(static_cast<std::size_t>(dim));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& v : dir) {
      v = gauss(rng);
      norm += v * v;
    }
  } while (norm < 1e-300);
  const double radius = radius_bound * unit(rng);
  return HyperPoint::from_polar(dir, radius);
}

HyperPoint random_point(int dim, double radius_bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_point(dim, radius_bound, rng);
}

}  // namespace hypheat
