// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "hypheat/estimates.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/series.hpp"
#include "hypheat/verify.hpp"

using namespace hypheat;

namespace {

constexpr double kTol = 1e-8;
constexpr long kTrials = 1000;
constexpr std::uint64_t kSeed = 0;

struct Result {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. The H^3 kernel attains the sharp bound at every grid point.
Result sharpness() {
  const GridSpec grid = default_grid({3});
  double worst = 0.0;
  for (double t : grid.t_values) {
    for (double r : grid.r_values) {
      const KernelEval k = kernel(3, t, r);
      worst = std::max(worst, std::abs(std::abs(k.dr_log_k) - sharp_h3_bound(t, k.dt_log_k)));
    }
  }
  return {worst <= 1e-10, std::to_string(grid.size()) + " points, max gap " + sci(worst)};
}

// 2. Random mixtures satisfy the estimates.
Result superposition_validity() {
  std::vector<std::pair<int, std::vector<EstimateId>>> plan;
  plan.push_back({3,
                  {est::SharpH3{}, est::LinearizedH3(0.0), est::LinearizedH3(1.0),
                   est::LinearizedH3(5.0)}});
  for (int n : {2, 3, 5, 7}) {
    std::vector<EstimateId> ids{n % 2 ? EstimateId(est::GeneralOdd{}) : EstimateId(est::GeneralEven{}),
                                est::BetaFamily(0.0), est::BetaFamily(0.5), est::BetaFamily(0.9),
                                est::DtLower{}};
    plan.push_back({n, ids});
  }
  std::size_t runs = 0, violations = 0;
  std::string first;
  for (const auto& [n, ids] : plan) {
    for (const auto& r : run_superposition_suite(ids, n, kTrials, kSeed, kTol)) {
      ++runs;
      violations += r.violations.size();
      if (!r.violations.empty() && first.empty()) first = " first: " + r.estimate;
    }
  }
  return {violations == 0,
          std::to_string(runs) + " suites x " + std::to_string(kTrials) + " trials, " +
              std::to_string(violations) + " violations" + first};
}

// 3. First coefficient sign argument, exactly.
Result series_first() {
  const SeriesReport rep = verify_first_sign_argument(400);
  bool ok = rep.pass && rep.rows.size() == 201 && rep.rows[3].numerator == -512;
  for (int k = 0; k < 3; ++k) ok = ok && rep.rows[k].numerator == 0;
  for (std::size_t k = 3; k < rep.rows.size(); ++k) ok = ok && rep.rows[k].sign < 0;
  return {ok, "k = 3..200 negative, k=3 numerator " + rep.rows[3].numerator.str()};
}

// 4. Second coefficient sign argument, exactly.
Result series_second() {
  const SeriesReport rep = verify_second_sign_argument(400);
  bool ok = rep.pass && rep.rows.size() == 201 && rep.rows[5].inner == -1680;
  for (int k = 0; k < 5; ++k) ok = ok && rep.rows[k].numerator == 0;
  for (std::size_t k = 5; k < rep.rows.size(); ++k) ok = ok && rep.rows[k].sign <= 0;
  const DominanceReport dom = verify_dominance_inequalities(200);
  ok = ok && dom.pass;
  return {ok, "forms agree to order 400, k=5 inner " + rep.rows[5].inner.str() +
                  ", dominance chains to k=200 " + (dom.pass ? "hold" : "fail")};
}

// 5. Concavity of the squared H^3 bound.
Result concavity() {
  const ConcavityReport rep = run_concavity_scan({0.1, 1.0, 10.0}, 200);
  double worst_diff = -INFINITY, worst_mismatch = 0.0;
  for (const auto& row : rep.rows) {
    worst_diff = std::max(worst_diff, row.max_second_difference);
    worst_mismatch = std::max(worst_mismatch, row.max_relative_mismatch);
  }
  return {rep.pass, "max second difference " + sci(worst_diff) + ", max d2Y/dX2 mismatch " +
                        sci(worst_mismatch)};
}

// 6. Harnack inequality: tight for the kernel at its center, valid on mixtures.
Result harnack() {
  const HyperPoint o = HyperPoint::origin(3);
  const Superposition k3(3, {o}, {1.0});
  double worst = 0.0;
  for (auto [t1, t2] : {std::pair{0.1, 1.0}, std::pair{1.0, 2.0}, std::pair{0.5, 5.0}}) {
    worst = std::max(worst, std::abs(harnack_log_slack(k3, t1, o, t2, o)));
  }
  std::size_t violations = 0;
  for (int n : {3, 5}) violations += run_harnack_suite(n, kTrials, kSeed, kTol).violations.size();
  return {worst <= 1e-10 && violations == 0,
          "tightness gap " + sci(worst) + ", " + std::to_string(violations) + " violations in " +
              std::to_string(2 * kTrials) + " trials"};
}

// 7. Structure of the profile alpha_n.
Result alpha_structure() {
  const GridSpec grid = default_grid();
  bool ok = true;
  std::string where;
  auto fail = [&](int n, double t, double r, const char* what) {
    if (ok) where = std::string(" first failure: ") + what + " n=" + std::to_string(n) + " t=" +
                    sci(t) + " r=" + sci(r);
    ok = false;
  };
  for (int n : {2, 3, 5, 7}) {
    for (double t : grid.t_values) {
      for (double r : grid.r_values) {
        const AlphaEval a = alpha_profile(n, t, r);
        if (-a.dr_log_alpha < 0.0 || -a.dr_log_alpha > 0.5 * (n - 1) + 1e-8) fail(n, t, r, "dr");
        if (n % 2 == 1 && a.alpha * a.dt_log_alpha < -1e-8) fail(n, t, r, "dt");
        if (n == 2 && std::sqrt(t) * a.alpha * (a.dt_log_alpha + 0.5 / t) < -1e-6) {
          fail(n, t, r, "dt sqrt(t)");
        }
        if (n == 3) {
          const double ref = r == 0.0 ? 1.0 : r / std::sinh(r);
          if (a.dt_log_alpha != 0.0 || std::abs(a.alpha - ref) > 1e-14 * ref) fail(n, t, r, "alpha3");
        }
      }
    }
  }
  return {ok, "n = 2,3,5,7 on the default grid" + where};
}

// 8. Kernel normalization, derivatives, and the n = 3 recursion base.
Result kernel_correctness() {
  double mass_err = 0.0;
  for (int n : {2, 3, 5}) {
    for (double t : {0.1, 1.0, 10.0}) mass_err = std::max(mass_err, std::abs(oracle::kernel_mass(n, t) - 1));
  }
  const GridSpec grid = default_grid();
  double fd_err = 0.0;
  for (int n : {2, 3, 5, 7}) {
    for (double t : grid.t_values) {
      for (double r : grid.r_values) {
        const KernelEval k = kernel(n, t, r);
        const double ht = 1e-4 * std::max(1.0, t);
        const double dt = oracle::fd5([&](double s) { return kernel(n, s, r).log_k; }, t, ht);
        fd_err = std::max(fd_err, std::abs(dt - k.dt_log_k) / (1 + std::abs(k.dt_log_k)));
        if (r > 0.0) {
          const double hr = std::min(1e-4 * std::max(1.0, r), r / 3);
          const double dr = oracle::fd5([&](double s) { return kernel(n, t, s).log_k; }, r, hr);
          fd_err = std::max(fd_err, std::abs(dr - k.dr_log_k) / (1 + std::abs(k.dr_log_k)));
        }
      }
    }
  }
  double base_err = 0.0;
  for (double t : grid.t_values) {
    for (double r : grid.r_values) {
      const KernelEval a = kernel_odd(3, t, r);
      const KernelEval b = kernel_h3(t, r);
      base_err = std::max(base_err, std::abs(std::expm1(a.log_k - b.log_k)));
    }
  }
  return {mass_err <= 1e-6 && fd_err <= 1e-6 && base_err <= 1e-12,
          "mass error " + sci(mass_err) + ", finite-difference error " + sci(fd_err) +
              ", n=3 recursion vs closed form " + sci(base_err)};
}

// 9. The odd-dimensional time constant fails on H^2; the even one does not.
Result negative_control() {
  const GridSpec grid = default_grid({2});
  const VerificationReport odd = run_grid_scan(est::DtLower{true}, grid, kTol);
  const Violation* witness = nullptr;
  for (const auto& v : odd.violations) {
    if (v.slack < -1e-6 && (!witness || v.slack < witness->slack)) witness = &v;
  }
  const VerificationReport even_grid = run_grid_scan(est::DtLower{}, grid, kTol);
  const VerificationReport even_mix = run_superposition_suite(est::DtLower{}, 2, kTrials, kSeed, kTol);
  const bool ok = witness != nullptr && even_grid.passed() && even_mix.passed();
  std::string detail = witness ? "witness t=" + sci(witness->t) + " r=" + sci(witness->r) +
                                     " slack " + sci(witness->slack)
                               : "no witness";
  return {ok, detail + "; m = n+1 form " + (even_grid.passed() && even_mix.passed() ? "passes" : "fails")};
}

// 10. Grid verdicts predict superposition verdicts.
Result consistency() {
  std::vector<EstimateId> shipped{est::LiYau(1.5), est::LiYau(2.0), est::Yau(), est::BakryQian(),
                                  est::BakryPhi(), est::SharpH3{}, est::SharpH3Simple{},
                                  est::LinearizedH3(0.0), est::LinearizedH3(1.0),
                                  est::LinearizedH3(5.0), est::GeneralOdd{}, est::GeneralEven{},
                                  est::BetaFamily(0.0), est::BetaFamily(0.5), est::BetaFamily(0.9),
                                  est::DtLower{}, est::DtLower{true}};
  std::size_t compared = 0, mismatches = 0;
  std::string first;
  for (int n : {2, 3, 5, 7}) {
    std::vector<EstimateId> ids;
    for (const auto& e : shipped) {
      if (estimate_applicable(e, n)) ids.push_back(e);
    }
    const auto grid = run_grid_scan(ids, default_grid({n}), kTol);
    for (std::uint64_t seed : {11u, 22u, 33u}) {
      const auto mix = run_superposition_suite(ids, n, kTrials, seed, kTol);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        ++compared;
        if (grid[i].passed() != mix[i].passed()) {
          ++mismatches;
          if (first.empty()) first = " first: " + grid[i].estimate + " n=" + std::to_string(n);
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(compared) + " (estimate, dim, seed) comparisons, " +
                               std::to_string(mismatches) + " mismatches" + first};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"sharpness of the H^3 bound on the kernel", sharpness},
      {"estimates hold on random superpositions", superposition_validity},
      {"exact series, first argument", series_first},
      {"exact series, second argument", series_second},
      {"concavity of the squared H^3 bound", concavity},
      {"Harnack tightness and validity", harnack},
      {"structure of alpha_n", alpha_structure},
      {"kernel mass, derivatives, recursion base", kernel_correctness},
      {"negative control on H^2", negative_control},
      {"grid and superposition verdicts agree", consistency},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s: %s (%s) [%.1fs]\n", i + 1, r.pass ? "PASS" : "FAIL",
                criteria[i].first, r.detail.c_str(), secs);
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
