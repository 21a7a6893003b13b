#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypheat/estimates.hpp"
#include "hypheat/geometry.hpp"
#include "hypheat/kernel.hpp"

namespace hypheat {

/// Positive solution sum_i w_i K_n(t, d(x, y_i)).
struct Superposition {
  Superposition(int dim, std::vector<HyperPoint> centers, std::vector<double> weights);

  int dim;
  std::vector<HyperPoint> centers;
  std::vector<double> weights;
};

struct MixturePoint {
  SolutionSample sample;
  double log_u = 0.0;
};

/// Log-derivatives of the mixture at (t, x), with log-sum-exp weighting.
SolutionSample eval_superposition(const Superposition& s, double t, const HyperPoint& x);
/// Same plus log u(t, x).
MixturePoint eval_superposition_full(const Superposition& s, double t, const HyperPoint& x);

struct GridSpec {
  GridSpec(std::vector<double> t_values, std::vector<double> r_values, std::vector<int> dims);

  std::vector<double> t_values;
  std::vector<double> r_values;
  std::vector<int> dims;

  std::size_t size() const { return t_values.size() * r_values.size() * dims.size(); }
};

/// t in {0.05, 0.1, 0.2, 0.5, 1, 2, 5, 10}; r = 0 plus 64 log-spaced points in [1e-3, 20].
GridSpec default_grid(std::vector<int> dims = {3});

struct Violation {
  int dim = 0;
  double t = 0.0;
  double r = 0.0;      // grid radius, or distance to the nearest center
  long trial = -1;     // superposition / Harnack trial, -1 for grid points
  double t2 = 0.0;     // later time of a Harnack pair
  double slack = 0.0;
  double rhs = 0.0;
};

struct VerificationReport {
  std::string estimate;
  std::string mode;  // "grid", "superposition", "harnack"
  double tolerance = 0.0;
  std::size_t total_points = 0;
  std::vector<Violation> violations;
  double min_slack = 0.0;
  double max_abs_equality_gap = 0.0;

  bool passed() const { return violations.empty(); }
};

/// Relative-near-large, absolute-near-zero violation rule.
inline bool is_violation(double slack, double rhs, double tol) {
  return slack < -tol * (1.0 + (rhs < 0 ? -rhs : rhs));
}

/// Worker threads actually used for `requested` (0 = hardware), capped by
/// the HYPHEAT_THREADS environment variable.
unsigned resolve_threads(unsigned requested);

VerificationReport run_grid_scan(const EstimateId& estimate, const GridSpec& grid, double tol,
                                 unsigned threads = 0);
std::vector<VerificationReport> run_grid_scan(const std::vector<EstimateId>& estimates,
                                              const GridSpec& grid, double tol,
                                              unsigned threads = 0);

/// The random test solutions: 1-10 centers within distance 5 of the origin,
/// log-uniform weights in [1e-3, 1e3], log-uniform t in [0.05, 10], and an
/// evaluation point within distance 5. Trial i depends only on (seed, i).
struct SuperpositionTrial {
  Superposition solution;
  double t;
  HyperPoint x;
};
SuperpositionTrial draw_superposition_trial(int dim, std::uint64_t seed, long trial);

VerificationReport run_superposition_suite(const EstimateId& estimate, int dim, long trials,
                                           std::uint64_t seed, double tol, unsigned threads = 0);
std::vector<VerificationReport> run_superposition_suite(const std::vector<EstimateId>& estimates,
                                                        int dim, long trials, std::uint64_t seed,
                                                        double tol, unsigned threads = 0);

/// log(factor * u(t2, x2)) - log u(t1, x1); nonnegative when the Harnack
/// inequality holds.
double harnack_log_slack(const Superposition& u, double t1, const HyperPoint& x1, double t2,
                         const HyperPoint& x2);

/// Random (t1 < t2, x1, x2, u) with t2 - t1 >= 1e-3 enforced by redrawing.
VerificationReport run_harnack_suite(int dim, long trials, std::uint64_t seed, double tol,
                                     unsigned threads = 0);

struct ConcavityRow {
  double t = 0.0;
  double max_second_difference = 0.0;  // of s -> sharp_h3_bound(t, s)^2
  double max_d2y_dx2 = 0.0;            // analytic, over interior radii
  double max_relative_mismatch = 0.0;  // analytic vs numeric second derivative
  double small_r_d2y_dx2 = 0.0;        // analytic value at r = 1e-3, recorded only
  bool pass = false;
};

struct ConcavityReport {
  std::vector<ConcavityRow> rows;
  bool pass = false;
};

/// Concavity of Y(X) for each t: second differences over an s-grid of
/// `s_grid_size` points spanning r in [0, 20], and the closed-form d^2Y/dX^2
/// against a five-point numeric second derivative on interior radii.
ConcavityReport run_concavity_scan(const std::vector<double>& t_values, std::size_t s_grid_size);

inline constexpr double kConcavitySecondDifferenceTol = 1e-10;
inline constexpr double kConcavityMismatchTol = 1e-4;

/// Column set of the comparison table.
std::vector<std::pair<std::string, EstimateId>> comparison_columns();

struct ComparisonRow {
  int dim = 0;
  double t = 0.0;
  double r = 0.0;
  std::vector<std::optional<double>> slack;  // per column; empty when n/a
  std::vector<std::string> errors;           // per column; "" unless evaluation failed
};

struct ComparisonTable {
  std::vector<std::string> columns;
  std::vector<ComparisonRow> rows;
};

ComparisonTable run_comparison_report(const GridSpec& grid, unsigned threads = 0);

}  // namespace hypheat
