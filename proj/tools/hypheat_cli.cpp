// hypheat: heat kernels on H^n and checks of gradient estimates against them.
//
// Exit status: 0 all checks pass, 1 a mathematical violation was found,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hypheat/errors.hpp"
#include "hypheat/estimates.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/report_json.hpp"
#include "hypheat/series.hpp"
#include "hypheat/verify.hpp"

namespace {

using namespace hypheat;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GridOverrides {
  std::vector<double> t_values;
  std::vector<double> r_values;
};

GridSpec make_grid(const GridOverrides& g, std::vector<int> dims) {
  GridSpec def = default_grid(dims);
  return GridSpec(g.t_values.empty() ? def.t_values : g.t_values,
                  g.r_values.empty() ? def.r_values : g.r_values, std::move(dims));
}

void add_grid_options(CLI::App* cmd, GridOverrides& g) {
  cmd->add_option("--t-values", g.t_values, "Override grid times (ascending)")->delimiter(',');
  cmd->add_option("--r-values", g.r_values, "Override grid radii (ascending)")->delimiter(',');
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file " + path);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void summarize(const VerificationReport& r) {
  std::cerr << r.estimate << " [" << r.mode << "]: " << r.total_points << " points, "
            << r.violations.size() << " violations, min slack " << r.min_slack << "\n";
  if (!r.violations.empty()) {
    const Violation& v = r.violations.front();
    std::cerr << "  first witness: n=" << v.dim << " t=" << v.t << " r=" << v.r;
    if (v.trial >= 0) std::cerr << " trial=" << v.trial;
    std::cerr << " slack=" << v.slack << "\n";
  }
}

struct VerifyConfig {
  std::string estimate;
  int dim = 3;
  long trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string mode = "all";
  std::string output;
  std::string format = "json";
  unsigned threads = 0;
  EstimateParams params;
  std::optional<double> k;
  GridOverrides grid;
};

int run_verify(VerifyConfig& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
  if (c.format != "json") throw UsageError("verify writes json only");
  if (!dimension_supported(c.dim)) {
    throw UsageError("unsupported dimension " + std::to_string(c.dim));
  }

  std::vector<VerificationReport> reports;
  if (c.estimate == "harnack") {
    reports.push_back(run_harnack_suite(c.dim, c.trials, c.seed, c.tol, c.threads));
  } else {
    c.params.dim = c.dim;
    c.params.k = c.k;
    const EstimateId id = estimate_from_name(c.estimate, c.params);
    if (!estimate_applicable(id, c.dim)) {
      throw UsageError(estimate_name(id) + " is not stated for H^" + std::to_string(c.dim));
    }
    if (c.mode == "grid" || c.mode == "all") {
      reports.push_back(run_grid_scan(id, make_grid(c.grid, {c.dim}), c.tol, c.threads));
    }
    if (c.mode == "superposition" || c.mode == "all") {
      reports.push_back(run_superposition_suite(id, c.dim, c.trials, c.seed, c.tol, c.threads));
    }
  }

  bool passed = true;
  for (const auto& r : reports) {
    summarize(r);
    passed = passed && r.passed();
  }
  nlohmann::json j = to_json(reports);
  j["dim"] = c.dim;
  j["seed"] = c.seed;
  emit(dump(j), c.output);
  return passed ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat kernels on hyperbolic space and Li-Yau type gradient estimates"};
  app.require_subcommand(1);

  // kernel
  int kn = 3;
  double kt = 1.0;
  double kr = 0.0;
  auto* kernel_cmd = app.add_subcommand("kernel", "Evaluate log K_n and its derivatives");
  kernel_cmd->add_option("-n,--dim", kn, "Dimension")->required();
  kernel_cmd->add_option("-t,--time", kt, "Time t > 0")->required();
  kernel_cmd->add_option("-r,--radius", kr, "Geodesic distance r >= 0")->required();

  // verify
  VerifyConfig vc;
  auto* verify_cmd = app.add_subcommand("verify", "Check an estimate on kernels and mixtures");
  verify_cmd->add_option("estimate", vc.estimate, "Estimate name, or 'harnack'")->required();
  verify_cmd->add_option("--dim", vc.dim, "Dimension");
  verify_cmd->add_option("--trials", vc.trials, "Random superposition trials");
  verify_cmd->add_option("--seed", vc.seed, "Random seed");
  verify_cmd->add_option("--tol", vc.tol, "Relative violation tolerance");
  verify_cmd->add_option("--mode", vc.mode, "grid, superposition or all")
      ->check(CLI::IsMember({"grid", "superposition", "all"}));
  verify_cmd->add_option("--output,-o", vc.output, "Report path (default stdout)");
  verify_cmd->add_option("--format", vc.format, "Report format (json)");
  verify_cmd->add_option("--threads", vc.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--alpha", vc.params.alpha, "li-yau alpha");
  verify_cmd->add_option("--k", vc.k, "Curvature constant (default from n)");
  verify_cmd->add_option("--r0", vc.params.r0, "linearized-h3 tangent radius");
  verify_cmd->add_option("--beta", vc.params.beta, "beta-family parameter in [0, 1)");
  verify_cmd->add_flag("--use-odd-constant", vc.params.odd_constant,
                       "dt-lower: use m = n even in even dimensions");
  add_grid_options(verify_cmd, vc.grid);

  // series
  std::string which;
  int order = 400;
  long bound = 200;
  std::string series_out;
  auto* series_cmd = app.add_subcommand("series", "Exact rational series verification");
  series_cmd->add_option("which", which, "first, second or dominance")
      ->required()
      ->check(CLI::IsMember({"first", "second", "dominance"}));
  series_cmd->add_option("--order", order, "Truncation order in r");
  series_cmd->add_option("--bound", bound, "Largest k for the dominance chains");
  series_cmd->add_option("--output,-o", series_out, "Report path (default stdout)");

  // concavity
  std::vector<double> conc_t{0.1, 1.0, 10.0};
  std::size_t s_grid = 200;
  std::string conc_out;
  auto* conc_cmd = app.add_subcommand("concavity", "Concavity scan of the H^3 bound");
  conc_cmd->add_option("--t-values", conc_t, "Times")->delimiter(',');
  conc_cmd->add_option("--s-grid", s_grid, "Points per s-grid");
  conc_cmd->add_option("--output,-o", conc_out, "Report path (default stdout)");

  // compare
  std::vector<int> cmp_dims{3};
  std::string cmp_format = "csv";
  std::string cmp_out;
  unsigned cmp_threads = 0;
  GridOverrides cmp_grid;
  auto* cmp_cmd = app.add_subcommand("compare", "Slack of every estimate on a grid");
  cmp_cmd->add_option("--dims", cmp_dims, "Dimensions")->delimiter(',');
  cmp_cmd->add_option("--format", cmp_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmp_cmd->add_option("--output,-o", cmp_out, "Output path (default stdout)");
  cmp_cmd->add_option("--threads", cmp_threads, "Worker threads (0 = all cores)");
  add_grid_options(cmp_cmd, cmp_grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*kernel_cmd) {
      if (!dimension_supported(kn)) {
        throw UsageError("unsupported dimension " + std::to_string(kn) + " (odd n <= " +
                         std::to_string(kMaxOddDim) + ", even n <= " + std::to_string(kMaxEvenDim) +
                         ")");
      }
      const KernelEval k = kernel(kn, kt, kr);
      emit(dump(to_json(k, alpha_profile(kn, kt, kr))), "");
      return 0;
    }
    if (*verify_cmd) return run_verify(vc);
    if (*series_cmd) {
      nlohmann::json j;
      bool pass = false;
      if (which == "dominance") {
        const DominanceReport r = verify_dominance_inequalities(bound);
        j = to_json(r);
        pass = r.pass;
      } else {
        const SeriesReport r = which == "first" ? verify_first_sign_argument(order)
                                                : verify_second_sign_argument(order);
        j = to_json(r);
        pass = r.pass;
      }
      std::cerr << "series " << which << ": " << (pass ? "pass" : "FAIL") << "\n";
      emit(dump(j), series_out);
      return pass ? 0 : kExitViolation;
    }
    if (*conc_cmd) {
      const ConcavityReport r = run_concavity_scan(conc_t, s_grid);
      std::cerr << "concavity: " << (r.pass ? "pass" : "FAIL") << "\n";
      emit(dump(to_json(r)), conc_out);
      return r.pass ? 0 : kExitViolation;
    }
    if (*cmp_cmd) {
      const ComparisonTable t = run_comparison_report(make_grid(cmp_grid, cmp_dims), cmp_threads);
      emit(cmp_format == "csv" ? to_csv(t) : dump(to_json(t)), cmp_out);
      return 0;
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitViolation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
