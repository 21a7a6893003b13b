#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hypheat {

/// Observed log-derivatives of a positive solution u at one space-time point.
struct SolutionSample {
  double t = 1.0;
  double grad_sq = 0.0;  // |grad log u|^2
  double dt_log = 0.0;   // d/dt log u
  int dim = 3;
};

// Catalogue entries. A missing curvature constant means "use the value for
// H^n": k = n-1 for the Ric >= -k estimates, and the signed lower bound
// k = -(n-1) for Bakry's Phi estimate, which is written for Ric >= k.
namespace est {

struct LiYau {
  LiYau(double alpha, std::optional<double> k = std::nullopt);
  double alpha;
  std::optional<double> k;
};
struct BakryPhi {
  explicit BakryPhi(std::optional<double> k = std::nullopt);
  std::optional<double> k;
};
struct Yau {
  explicit Yau(std::optional<double> k = std::nullopt);
  std::optional<double> k;
};
struct BakryQian {
  explicit BakryQian(std::optional<double> k = std::nullopt);
  std::optional<double> k;
};
struct SharpH3 {};
struct SharpH3Simple {};
struct LinearizedH3 {
  explicit LinearizedH3(double r0);
  double r0;
};
struct GeneralOdd {};
struct GeneralEven {};
struct BetaFamily {
  explicit BetaFamily(double beta);
  double beta;
};
/// d/dt log u + m/2t + (n-1)^2/4 >= 0 with m = n (odd n) or n+1 (even n).
/// `odd_constant` forces m = n in every dimension (false in even dimensions).
struct DtLower {
  bool odd_constant = false;
};

}  // namespace est

using EstimateId =
    std::variant<est::LiYau, est::BakryPhi, est::Yau, est::BakryQian, est::SharpH3,
                 est::SharpH3Simple, est::LinearizedH3, est::GeneralOdd, est::GeneralEven,
                 est::BetaFamily, est::DtLower>;

/// Stable identifier with parameters, e.g. "li_yau(alpha=2,k=auto)".
std::string estimate_name(const EstimateId& id);

/// Parameters accepted by estimate_from_name; unused ones are ignored.
struct EstimateParams {
  int dim = 3;  // picks general_odd / general_even for "general-h"
  double alpha = 2.0;
  std::optional<double> k;
  double r0 = 0.0;
  double beta = 0.0;
  bool odd_constant = false;
};

/// Parses names such as "sharp-h3", "li-yau", "general-h" (dashes or
/// underscores). Throws UsageError for unknown names.
EstimateId estimate_from_name(const std::string& name, const EstimateParams& p = {});

/// Names understood by estimate_from_name.
const std::vector<std::string>& estimate_names();

/// Whether the estimate is stated for H^n.
bool estimate_applicable(const EstimateId& id, int n);

struct CheckOutcome {
  bool holds = false;  // slack >= -tol
  double slack = 0.0;  // RHS - LHS in the estimate's native form
  double rhs = 0.0;    // magnitude reference for relative tolerances
  EstimateId estimate = est::SharpH3{};
};

/// Dispatches to the individual checks below.
CheckOutcome check_estimate(const EstimateId& id, const SolutionSample& s, double tol);

/// |grad log u|^2 - alpha d/dt log u <= n alpha^2/2t + n alpha^2 k / (2(alpha-1)).
/// alpha = 1 is accepted only with k = 0.
CheckOutcome li_yau_check(const SolutionSample& s, double alpha, double k, double tol);

/// Bakry's Phi(t, x) for a Ricci lower bound k != 0; coth branch for x <= 1,
/// cot branch up to the pole x = 1 + pi^2/(k t)^2.
double bakry_phi(double t, double x, double k);

/// |grad log u|^2 < (n/2) Phi(t, 4 d/dt log u / (n k)).
CheckOutcome bakry_phi_check(const SolutionSample& s, double k, double tol);

CheckOutcome yau_check(const SolutionSample& s, double k, double tol);
CheckOutcome bakry_qian_check(const SolutionSample& s, double k, double tol);

/// S + Z(2tS) with S = sqrt(d/dt log u + 3/2t + 1). Radicands down to
/// -radicand_tol * (1 + |dt_log|) are clamped to zero; below that a
/// DomainError reports the broken lower bound on d/dt log u.
double sharp_h3_bound(double t, double dt_log, double radicand_tol = 1e-12);
/// S + 1.
double sharp_h3_simple_bound(double t, double dt_log, double radicand_tol = 1e-12);

CheckOutcome sharp_h3_check(const SolutionSample& s, double tol);
CheckOutcome sharp_h3_simple_check(const SolutionSample& s, double tol);

/// Tangent-line relaxation of the squared H^3 bound at X0 = X(r0).
CheckOutcome linearized_h3_check(const SolutionSample& s, double r0, double tol);

/// The slope coefficient 1 + 2(Z'(r0) + Z(r0)/r0) t + 4 Z(r0) Z'(r0) t^2 / r0.
double linearization_slope(double t, double r0);

/// m = n for odd n, n + 1 for even n.
int time_constant(int n) noexcept;

/// sqrt(d/dt log u + m/2t + (n-1)^2/4) + (n-1)/2.
double general_h_bound(int n, double t, double dt_log, double radicand_tol = 1e-12);
CheckOutcome general_h_check(const SolutionSample& s, double tol);

CheckOutcome beta_family_check(const SolutionSample& s, double beta, double tol);

/// Multiplier in u(t1, x1) <= factor * u(t2, x2) at distance r, 0 < t1 < t2.
double harnack_factor(int n, double t1, double t2, double r);
double log_harnack_factor(int n, double t1, double t2, double r);

CheckOutcome dt_lower_check(const SolutionSample& s, double tol, bool odd_constant = false);

// H^3 profile Y(X) = |grad log K_3|^2 as a function of X = d/dt log K_3,
// parameterized by r.

/// dY/dX at radius r.
double h3_dy_dx(double t, double r);
/// d^2Y/dX^2 at radius r > 0, assembled from Z, Z', Z''.
double h3_d2y_dx2(double t, double r);
/// The bracket r^2 Z'' + r Z' - Z.
double h3_first_bracket(double r);
/// The bracket r Z Z'' + r Z'^2 - Z Z'.
double h3_second_bracket(double r);

}  // namespace hypheat
