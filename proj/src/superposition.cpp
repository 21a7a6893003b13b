#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hypheat/errors.hpp"
#include "hypheat/verify.hpp"
#include "parallel.hpp"

namespace hypheat {

namespace {

// Centers closer than this contribute no gradient (d/dr log K vanishes at r = 0).
constexpr double kCoincident = 1e-10;

constexpr double kCenterRadius = 5.0;
constexpr int kMaxCenters = 10;
constexpr double kMinWeight = 1e-3;
constexpr double kMaxWeight = 1e3;
constexpr double kMinTime = 0.05;
constexpr double kMaxTime = 10.0;
constexpr double kMinHarnackGap = 1e-3;

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::mt19937_64 trial_rng(std::uint64_t seed, long trial, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

Superposition draw_solution(int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, kMaxCenters);
  const int m = count(rng);
  std::vector<HyperPoint> centers;
  std::vector<double> weights;
  for (int i = 0; i < m; ++i) {
    centers.push_back(random_point(dim, kCenterRadius, rng));
    weights.push_back(log_uniform(rng, kMinWeight, kMaxWeight));
  }
  return Superposition(dim, std::move(centers), std::move(weights));
}

double nearest_center(const Superposition& s, const HyperPoint& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : s.centers) best = std::min(best, distance(x, c));
  return best;
}

VerificationReport empty_report(std::string estimate, std::string mode, double tol) {
  VerificationReport r;
  r.estimate = std::move(estimate);
  r.mode = std::move(mode);
  r.tolerance = tol;
  r.min_slack = std::numeric_limits<double>::infinity();
  return r;
}

void record(VerificationReport& rep, const Violation& v, double tol) {
  ++rep.total_points;
  rep.min_slack = std::min(rep.min_slack, v.slack);
  rep.max_abs_equality_gap = std::max(rep.max_abs_equality_gap, std::abs(v.slack));
  if (is_violation(v.slack, v.rhs, tol)) rep.violations.push_back(v);
}

}  // namespace

Superposition::Superposition(int d, std::vector<HyperPoint> c, std::vector<double> w)
    : dim(d), centers(std::move(c)), weights(std::move(w)) {
  if (centers.empty()) throw UsageError("superposition needs at least one center");
  if (centers.size() != weights.size()) throw UsageError("superposition: centers/weights size");
  for (const auto& p : centers) {
    if (p.dim() != dim) throw UsageError("superposition: center of the wrong dimension");
  }
  for (double x : weights) {
    if (!(x > 0.0) || !std::isfinite(x)) throw UsageError("superposition weights must be > 0");
  }
}

MixturePoint eval_superposition_full(const Superposition& s, double t, const HyperPoint& x) {
  if (x.dim() != s.dim) throw UsageError("eval_superposition: point of the wrong dimension");
  const std::size_t m = s.centers.size();
  std::vector<KernelEval> evals;
  std::vector<double> dist(m);
  std::vector<double> log_terms(m);
  evals.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    dist[i] = distance(x, s.centers[i]);
    evals.push_back(kernel(s.dim, t, dist[i]));
    log_terms[i] = std::log(s.weights[i]) + evals[i].log_k;
  }
  const double shift = *std::max_element(log_terms.begin(), log_terms.end());
  double total = 0.0;
  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i) {
    p[i] = std::exp(log_terms[i] - shift);
    total += p[i];
  }
  std::vector<double> grad(x.coords().size(), 0.0);
  double dt_log = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    p[i] /= total;
    dt_log += p[i] * evals[i].dt_log_k;
    if (dist[i] < kCoincident) continue;
    const TangentVector g = grad_distance(x, s.centers[i]);
    const double coef = p[i] * evals[i].dr_log_k;
    for (std::size_t j = 0; j < grad.size(); ++j) grad[j] += coef * g.components[j];
  }
  MixturePoint out;
  out.sample.t = t;
  out.sample.dim = s.dim;
  out.sample.dt_log = dt_log;
  out.sample.grad_sq = std::max(minkowski_inner(grad, grad), 0.0);
  out.log_u = shift + std::log(total);
  return out;
}

SolutionSample eval_superposition(const Superposition& s, double t, const HyperPoint& x) {
  return eval_superposition_full(s, t, x).sample;
}

SuperpositionTrial draw_superposition_trial(int dim, std::uint64_t seed, long trial) {
  auto rng = trial_rng(seed, trial, 1);
  Superposition sol = draw_solution(dim, rng);
  const double t = log_uniform(rng, kMinTime, kMaxTime);
  HyperPoint x = random_point(dim, kCenterRadius, rng);
  return SuperpositionTrial{std::move(sol), t, std::move(x)};
}

std::vector<VerificationReport> run_superposition_suite(const std::vector<EstimateId>& estimates,
                                                        int dim, long trials, std::uint64_t seed,
                                                        double tol, unsigned threads) {
  if (trials < 1) throw UsageError("superposition suite needs trials >= 1");
  if (!dimension_supported(dim)) throw UsageError("unsupported dimension " + std::to_string(dim));
  for (const auto& e : estimates) {
    if (!estimate_applicable(e, dim)) {
      throw UsageError(estimate_name(e) + " is not stated for H^" + std::to_string(dim));
    }
  }
  // outcomes[trial][estimate]
  std::vector<std::vector<Violation>> outcomes(static_cast<std::size_t>(trials));
  detail::parallel_for(outcomes.size(), resolve_threads(threads), [&](std::size_t i) {
    const auto trial = draw_superposition_trial(dim, seed, static_cast<long>(i));
    const SolutionSample sample = eval_superposition(trial.solution, trial.t, trial.x);
    const double r = nearest_center(trial.solution, trial.x);
    auto& row = outcomes[i];
    for (const auto& e : estimates) {
      const CheckOutcome o = check_estimate(e, sample, tol);
      row.push_back(Violation{dim, trial.t, r, static_cast<long>(i), 0.0, o.slack, o.rhs});
    }
  });
  std::vector<VerificationReport> reports;
  for (const auto& e : estimates) reports.push_back(empty_report(estimate_name(e), "superposition", tol));
  for (const auto& row : outcomes) {
    for (std::size_t k = 0; k < row.size(); ++k) record(reports[k], row[k], tol);
  }
  return reports;
}

VerificationReport run_superposition_suite(const EstimateId& estimate, int dim, long trials,
                                           std::uint64_t seed, double tol, unsigned threads) {
  return run_superposition_suite(std::vector<EstimateId>{estimate}, dim, trials, seed, tol,
                                 threads)
      .front();
}

double harnack_log_slack(const Superposition& u, double t1, const HyperPoint& x1, double t2,
                         const HyperPoint& x2) {
  const double lf = log_harnack_factor(u.dim, t1, t2, distance(x1, x2));
  return lf + eval_superposition_full(u, t2, x2).log_u - eval_superposition_full(u, t1, x1).log_u;
}

VerificationReport run_harnack_suite(int dim, long trials, std::uint64_t seed, double tol,
                                     unsigned threads) {
  if (trials < 1) throw UsageError("harnack suite needs trials >= 1");
  if (!dimension_supported(dim)) throw UsageError("unsupported dimension " + std::to_string(dim));
  std::vector<Violation> rows(static_cast<std::size_t>(trials));
  detail::parallel_for(rows.size(), resolve_threads(threads), [&](std::size_t i) {
    auto rng = trial_rng(seed, static_cast<long>(i), 2);
    const Superposition u = draw_solution(dim, rng);
    double t1 = 0.0;
    double t2 = 0.0;
    do {
      t1 = log_uniform(rng, kMinTime, kMaxTime);
      t2 = log_uniform(rng, kMinTime, kMaxTime);
      if (t1 > t2) std::swap(t1, t2);
    } while (t2 - t1 < kMinHarnackGap);
    const HyperPoint x1 = random_point(dim, kCenterRadius, rng);
    const HyperPoint x2 = random_point(dim, kCenterRadius, rng);
    const double r = distance(x1, x2);
    const double lf = log_harnack_factor(dim, t1, t2, r);
    const double slack = harnack_log_slack(u, t1, x1, t2, x2);
    rows[i] = Violation{dim, t1, r, static_cast<long>(i), t2, slack, lf};
  });
  VerificationReport rep = empty_report("harnack", "harnack", tol);
  for (const auto& v : rows) record(rep, v, tol);
  return rep;
}

}  // namespace hypheat
