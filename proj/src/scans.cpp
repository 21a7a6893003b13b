#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "hypheat/errors.hpp"
#include "hypheat/special.hpp"
#include "hypheat/verify.hpp"
#include "parallel.hpp"

namespace hypheat {

namespace {

void require_sorted_nonempty(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw UsageError(std::string("grid: empty ") + what);
  if (!std::is_sorted(v.begin(), v.end())) throw UsageError(std::string("grid: unsorted ") + what);
}

VerificationReport empty_report(std::string estimate, double tol) {
  VerificationReport r;
  r.estimate = std::move(estimate);
  r.mode = "grid";
  r.tolerance = tol;
  r.min_slack = std::numeric_limits<double>::infinity();
  return r;
}

// Five-point central second derivative.
template <class F>
double second_derivative(F f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("HYPHEAT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

GridSpec::GridSpec(std::vector<double> t, std::vector<double> r, std::vector<int> d)
    : t_values(std::move(t)), r_values(std::move(r)), dims(std::move(d)) {
  require_sorted_nonempty(t_values, "t_values");
  require_sorted_nonempty(r_values, "r_values");
  if (dims.empty() || !std::is_sorted(dims.begin(), dims.end())) {
    throw UsageError("grid: dims must be nonempty and sorted");
  }
  if (!(t_values.front() > 0.0)) throw UsageError("grid: t values must be positive");
  if (!(r_values.front() >= 0.0)) throw UsageError("grid: r values must be nonnegative");
  for (int n : dims) {
    if (!dimension_supported(n)) throw UsageError("grid: unsupported dimension " + std::to_string(n));
  }
}

GridSpec default_grid(std::vector<int> dims) {
  std::vector<double> r{0.0};
  const double lo = std::log(1e-3);
  const double hi = std::log(20.0);
  constexpr int kPoints = 64;
  for (int i = 0; i < kPoints; ++i) r.push_back(std::exp(lo + (hi - lo) * i / (kPoints - 1)));
  r.back() = 20.0;
  return GridSpec({0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}, std::move(r), std::move(dims));
}

std::vector<VerificationReport> run_grid_scan(const std::vector<EstimateId>& estimates,
                                              const GridSpec& grid, double tol,
                                              unsigned threads) {
  for (const auto& e : estimates) {
    for (int n : grid.dims) {
      if (!estimate_applicable(e, n)) {
        throw UsageError(estimate_name(e) + " is not stated for H^" + std::to_string(n));
      }
    }
  }
  const std::size_t nt = grid.t_values.size();
  const std::size_t nr = grid.r_values.size();
  std::vector<std::vector<Violation>> outcomes(grid.size());
  detail::parallel_for(outcomes.size(), resolve_threads(threads), [&](std::size_t i) {
    const int n = grid.dims[i / (nt * nr)];
    const double t = grid.t_values[(i / nr) % nt];
    const double r = grid.r_values[i % nr];
    const KernelEval k = kernel(n, t, r);
    const SolutionSample s{t, k.dr_log_k * k.dr_log_k, k.dt_log_k, n};
    for (const auto& e : estimates) {
      const CheckOutcome o = check_estimate(e, s, tol);
      outcomes[i].push_back(Violation{n, t, r, -1, 0.0, o.slack, o.rhs});
    }
  });
  std::vector<VerificationReport> reports;
  for (const auto& e : estimates) reports.push_back(empty_report(estimate_name(e), tol));
  for (const auto& row : outcomes) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      auto& rep = reports[k];
      const auto& v = row[k];
      ++rep.total_points;
      rep.min_slack = std::min(rep.min_slack, v.slack);
      rep.max_abs_equality_gap = std::max(rep.max_abs_equality_gap, std::abs(v.slack));
      if (is_violation(v.slack, v.rhs, tol)) rep.violations.push_back(v);
    }
  }
  return reports;
}

VerificationReport run_grid_scan(const EstimateId& estimate, const GridSpec& grid, double tol,
                                 unsigned threads) {
  return run_grid_scan(std::vector<EstimateId>{estimate}, grid, tol, threads).front();
}

ConcavityReport run_concavity_scan(const std::vector<double>& t_values, std::size_t s_grid_size) {
  if (t_values.empty()) throw UsageError("concavity scan needs t values");
  if (s_grid_size < 3) throw UsageError("concavity scan needs at least 3 grid points");
  constexpr double kMaxRadius = 20.0;
  ConcavityReport report;
  report.pass = true;
  for (double t : t_values) {
    if (!(t > 0.0)) throw UsageError("concavity scan: t must be positive");
    ConcavityRow row;
    row.t = t;

    // (a) s -> bound(t, s)^2 on a uniform s-grid covering r in [0, 20].
    const double s_min = -1.5 / t - 1.0;
    const double span = (kMaxRadius / (2.0 * t)) * (kMaxRadius / (2.0 * t));
    const double h = span / static_cast<double>(s_grid_size - 1);
    std::vector<double> f(s_grid_size);
    for (std::size_t i = 0; i < s_grid_size; ++i) {
      const double b = sharp_h3_bound(t, s_min + h * static_cast<double>(i));
      f[i] = b * b;
    }
    row.max_second_difference = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < s_grid_size; ++i) {
      row.max_second_difference = std::max(row.max_second_difference, f[i + 1] - 2 * f[i] + f[i - 1]);
    }

    // (b) closed-form d^2Y/dX^2 on interior radii against a numeric second
    // derivative of X -> bound(t, X)^2.
    auto y_of_x = [t](double x) {
      const double b = sharp_h3_bound(t, x);
      return b * b;
    };
    row.max_d2y_dx2 = -std::numeric_limits<double>::infinity();
    constexpr int kRadii = 60;
    for (int i = 0; i < kRadii; ++i) {
      const double r = 0.1 * std::pow(100.0, static_cast<double>(i) / (kRadii - 1));  // [0.1, 10]
      const double analytic = h3_d2y_dx2(t, r);
      row.max_d2y_dx2 = std::max(row.max_d2y_dx2, analytic);
      if (r < 0.5) continue;
      const double x = -1.5 / t + r * r / (4.0 * t * t) - 1.0;
      const double hx = 1e-2 * r * r / (2.0 * t * t);  // dX/dr * (1e-2 r)
      const double numeric = second_derivative(y_of_x, x, hx);
      const double rel = std::abs(analytic - numeric) / std::abs(analytic);
      row.max_relative_mismatch = std::max(row.max_relative_mismatch, rel);
    }
    row.small_r_d2y_dx2 = h3_d2y_dx2(t, 1e-3);
    row.pass = row.max_second_difference <= kConcavitySecondDifferenceTol &&
               row.max_d2y_dx2 < 0.0 && row.max_relative_mismatch <= kConcavityMismatchTol;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<std::pair<std::string, EstimateId>> comparison_columns() {
  return {
      {"li_yau_a1.5", est::LiYau(1.5)},
      {"li_yau_a2", est::LiYau(2.0)},
      {"yau", est::Yau()},
      {"bakry_qian", est::BakryQian()},
      {"bakry_phi", est::BakryPhi()},
      {"sharp_h3", est::SharpH3{}},
      {"sharp_h3_simple", est::SharpH3Simple{}},
      {"general_h", est::GeneralOdd{}},  // parity resolved per row
      {"linearized_r0_0", est::LinearizedH3(0.0)},
      {"linearized_r0_1", est::LinearizedH3(1.0)},
  };
}

ComparisonTable run_comparison_report(const GridSpec& grid, unsigned threads) {
  const auto cols = comparison_columns();
  ComparisonTable table;
  for (const auto& c : cols) table.columns.push_back(c.first);
  const std::size_t nt = grid.t_values.size();
  const std::size_t nr = grid.r_values.size();
  table.rows.resize(grid.size());
  detail::parallel_for(table.rows.size(), resolve_threads(threads), [&](std::size_t i) {
    ComparisonRow& row = table.rows[i];
    row.dim = grid.dims[i / (nt * nr)];
    row.t = grid.t_values[(i / nr) % nt];
    row.r = grid.r_values[i % nr];
    row.slack.assign(cols.size(), std::nullopt);
    row.errors.assign(cols.size(), "");
    SolutionSample s;
    try {
      const KernelEval k = kernel(row.dim, row.t, row.r);
      s = SolutionSample{row.t, k.dr_log_k * k.dr_log_k, k.dt_log_k, row.dim};
    } catch (const std::exception& e) {
      for (auto& err : row.errors) err = e.what();
      return;
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      EstimateId id = cols[c].second;
      if (std::holds_alternative<est::GeneralOdd>(id) && row.dim % 2 == 0) id = est::GeneralEven{};
      if (!estimate_applicable(id, row.dim)) continue;
      try {
        row.slack[c] = check_estimate(id, s, 0.0).slack;
      } catch (const std::exception& e) {
        row.errors[c] = e.what();
      }
    }
  });
  return table;
}

}  // namespace hypheat
