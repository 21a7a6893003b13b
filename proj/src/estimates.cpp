#include "hypheat/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hypheat/errors.hpp"
#include "hypheat/special.hpp"

namespace hypheat {

namespace est {

LiYau::LiYau(double a, std::optional<double> kk) : alpha(a), k(kk) {
  if (!(alpha >= 1.0)) throw UsageError("li_yau: alpha must be > 1 (or 1 with k = 0)");
  if (k && !(*k >= 0.0)) throw UsageError("li_yau: k must be >= 0");
  if (alpha == 1.0 && k && *k != 0.0) throw UsageError("li_yau: alpha = 1 requires k = 0");
}

BakryPhi::BakryPhi(std::optional<double> kk) : k(kk) {
  if (k && (*k == 0.0 || !std::isfinite(*k))) throw UsageError("bakry_phi: k must be nonzero");
}

Yau::Yau(std::optional<double> kk) : k(kk) {
  if (k && !(*k > 0.0)) throw UsageError("yau: k must be > 0");
}

BakryQian::BakryQian(std::optional<double> kk) : k(kk) {
  if (k && !(*k > 0.0)) throw UsageError("bakry_qian: k must be > 0");
}

LinearizedH3::LinearizedH3(double r) : r0(r) {
  if (!(r0 >= 0.0) || !std::isfinite(r0)) throw UsageError("linearized_h3: r0 must be >= 0");
}

BetaFamily::BetaFamily(double b) : beta(b) {
  if (!(beta >= 0.0 && beta < 1.0)) throw UsageError("beta_family: beta must be in [0, 1)");
}

}  // namespace est

namespace {

void require_sample(const SolutionSample& s) {
  if (!(s.t > 0.0)) throw DomainError("sample time must be positive");
  if (!(s.grad_sq >= 0.0)) throw DomainError("sample grad_sq must be nonnegative");
  if (s.dim < 2) throw UsageError("sample dimension must be >= 2");
}

void require_dim3(const SolutionSample& s, const char* what) {
  if (s.dim != 3) throw UsageError(std::string(what) + " is stated for H^3 only");
}

CheckOutcome outcome(const EstimateId& id, double rhs, double lhs, double tol) {
  CheckOutcome o;
  o.slack = rhs - lhs;
  o.rhs = rhs;
  o.holds = o.slack >= -tol;
  o.estimate = id;
  return o;
}

// Broken precondition of a square-root bound: the slack is the (negative)
// radicand itself.
CheckOutcome radicand_violation(const EstimateId& id, double radicand, double scale, double tol) {
  CheckOutcome o;
  o.slack = radicand;
  o.rhs = scale;
  o.holds = o.slack >= -tol;
  o.estimate = id;
  return o;
}

// `scale` is the d/dt log u summand of the radicand. A radicand within the
// rounding bound of its own summation is zero: otherwise the square root
// turns a last-bit error into a ~1e-8 offset at equality points.
double checked_sqrt(double radicand, double scale, double radicand_tol, const char* what) {
  const double noise =
      4.0 * std::numeric_limits<double>::epsilon() * (std::abs(scale) + std::abs(radicand - scale));
  if (std::abs(radicand) <= noise) return 0.0;
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -radicand_tol * (1.0 + std::abs(scale))) return 0.0;
  std::ostringstream msg;
  msg << what << ": lower bound on d/dt log u violated (radicand " << radicand << ")";
  throw DomainError(msg.str());
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string fmt_k(const std::optional<double>& k) { return k ? fmt(*k) : "auto"; }

double ricci_k(const std::optional<double>& k, int n) { return k ? *k : n - 1.0; }

}  // namespace

int time_constant(int n) noexcept { return n % 2 == 1 ? n : n + 1; }

std::string estimate_name(const EstimateId& id) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, est::LiYau>)
          return "li_yau(alpha=" + fmt(e.alpha) + ",k=" + fmt_k(e.k) + ")";
        else if constexpr (std::is_same_v<T, est::BakryPhi>)
          return "bakry_phi(k=" + fmt_k(e.k) + ")";
        else if constexpr (std::is_same_v<T, est::Yau>)
          return "yau(k=" + fmt_k(e.k) + ")";
        else if constexpr (std::is_same_v<T, est::BakryQian>)
          return "bakry_qian(k=" + fmt_k(e.k) + ")";
        else if constexpr (std::is_same_v<T, est::SharpH3>)
          return "sharp_h3";
        else if constexpr (std::is_same_v<T, est::SharpH3Simple>)
          return "sharp_h3_simple";
        else if constexpr (std::is_same_v<T, est::LinearizedH3>)
          return "linearized_h3(r0=" + fmt(e.r0) + ")";
        else if constexpr (std::is_same_v<T, est::GeneralOdd>)
          return "general_odd";
        else if constexpr (std::is_same_v<T, est::GeneralEven>)
          return "general_even";
        else if constexpr (std::is_same_v<T, est::BetaFamily>)
          return "beta_family(beta=" + fmt(e.beta) + ")";
        else
          return e.odd_constant ? "dt_lower(odd_constant)" : "dt_lower";
      },
      id);
}

const std::vector<std::string>& estimate_names() {
  static const std::vector<std::string> names{
      "li-yau",        "bakry-phi",   "yau",          "bakry-qian",  "sharp-h3",
      "sharp-h3-simple", "linearized-h3", "general-h", "general-odd", "general-even",
      "beta-family",   "dt-lower"};
  return names;
}

EstimateId estimate_from_name(const std::string& raw, const EstimateParams& p) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '_', '-');
  if (name == "li-yau") return est::LiYau(p.alpha, p.k);
  if (name == "bakry-phi") return est::BakryPhi(p.k);
  if (name == "yau") return est::Yau(p.k);
  if (name == "bakry-qian") return est::BakryQian(p.k);
  if (name == "sharp-h3") return est::SharpH3{};
  if (name == "sharp-h3-simple") return est::SharpH3Simple{};
  if (name == "linearized-h3") return est::LinearizedH3(p.r0);
  if (name == "general-h") {
    if (p.dim % 2 == 1) return est::GeneralOdd{};
    return est::GeneralEven{};
  }
  if (name == "general-odd") return est::GeneralOdd{};
  if (name == "general-even") return est::GeneralEven{};
  if (name == "beta-family") return est::BetaFamily(p.beta);
  if (name == "dt-lower") return est::DtLower{p.odd_constant};
  throw UsageError("unknown estimate '" + raw + "'");
}

bool estimate_applicable(const EstimateId& id, int n) {
  if (n < 2) return false;
  return std::visit(
      [n](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, est::SharpH3> || std::is_same_v<T, est::SharpH3Simple> ||
                      std::is_same_v<T, est::LinearizedH3>)
          return n == 3;
        else if constexpr (std::is_same_v<T, est::GeneralOdd>)
          return n % 2 == 1;
        else if constexpr (std::is_same_v<T, est::GeneralEven>)
          return n % 2 == 0;
        else
          return true;
      },
      id);
}

CheckOutcome check_estimate(const EstimateId& id, const SolutionSample& s, double tol) {
  CheckOutcome o = std::visit(
      [&](const auto& e) -> CheckOutcome {
        using T = std::decay_t<decltype(e)>;
        const int n = s.dim;
        if constexpr (std::is_same_v<T, est::LiYau>)
          return li_yau_check(s, e.alpha, ricci_k(e.k, n), tol);
        else if constexpr (std::is_same_v<T, est::BakryPhi>)
          return bakry_phi_check(s, e.k ? *e.k : -(n - 1.0), tol);
        else if constexpr (std::is_same_v<T, est::Yau>)
          return yau_check(s, ricci_k(e.k, n), tol);
        else if constexpr (std::is_same_v<T, est::BakryQian>)
          return bakry_qian_check(s, ricci_k(e.k, n), tol);
        else if constexpr (std::is_same_v<T, est::SharpH3>)
          return sharp_h3_check(s, tol);
        else if constexpr (std::is_same_v<T, est::SharpH3Simple>)
          return sharp_h3_simple_check(s, tol);
        else if constexpr (std::is_same_v<T, est::LinearizedH3>)
          return linearized_h3_check(s, e.r0, tol);
        else if constexpr (std::is_same_v<T, est::GeneralOdd> ||
                           std::is_same_v<T, est::GeneralEven>) {
          if (!estimate_applicable(e, n)) throw UsageError(estimate_name(e) + ": wrong parity");
          return general_h_check(s, tol);
        } else if constexpr (std::is_same_v<T, est::BetaFamily>)
          return beta_family_check(s, e.beta, tol);
        else
          return dt_lower_check(s, tol, e.odd_constant);
      },
      id);
  o.estimate = id;
  return o;
}

CheckOutcome li_yau_check(const SolutionSample& s, double alpha, double k, double tol) {
  require_sample(s);
  const est::LiYau id(alpha, k);
  const double n = s.dim;
  double rhs = n * alpha * alpha / (2.0 * s.t);
  if (k > 0.0) rhs += n * alpha * alpha * k / (2.0 * (alpha - 1.0));
  return outcome(id, rhs, s.grad_sq - alpha * s.dt_log, tol);
}

double bakry_phi(double t, double x, double k) {
  if (!(t > 0.0)) throw DomainError("bakry_phi: t must be positive");
  if (k == 0.0 || !std::isfinite(k)) throw UsageError("bakry_phi: k must be nonzero");
  const double kt = k * t;
  const double pole = 1.0 + std::numbers::pi * std::numbers::pi / (kt * kt);
  if (!(x < pole)) {
    throw DomainError("bakry_phi: x = " + fmt(x) + " at or past the pole " + fmt(pole));
  }
  if (std::abs(x - 1.0) <= 1e-12) return 1.0 / t - 0.5 * k;
  if (x < 1.0) {
    const double a = std::sqrt(1.0 - x);
    return 0.5 * k * (x - 2.0 + 2.0 * a / std::tanh(kt * a));
  }
  const double a = std::sqrt(x - 1.0);
  return 0.5 * k * (x - 2.0 + 2.0 * a / std::tan(kt * a));
}

CheckOutcome bakry_phi_check(const SolutionSample& s, double k, double tol) {
  require_sample(s);
  const est::BakryPhi id(k);
  const double n = s.dim;
  const double x = 4.0 * s.dt_log / (n * k);
  const double kt = k * s.t;
  const double pole = 1.0 + std::numbers::pi * std::numbers::pi / (kt * kt);
  if (!(x < pole)) {
    // The companion inequality 4/(nk) d/dt log u < 1 + pi^2/(kt)^2 fails.
    return radicand_violation(id, pole - x, pole, tol);
  }
  return outcome(id, 0.5 * n * bakry_phi(s.t, x, k), s.grad_sq, tol);
}

CheckOutcome yau_check(const SolutionSample& s, double k, double tol) {
  require_sample(s);
  const est::Yau id(k);
  const double n = s.dim;
  const double lhs = s.grad_sq - std::sqrt(2.0 * n * k) *
                                     std::sqrt(s.grad_sq + n / (2.0 * s.t) + 2.0 * n * k);
  return outcome(id, s.dt_log + n / (2.0 * s.t), lhs, tol);
}

CheckOutcome bakry_qian_check(const SolutionSample& s, double k, double tol) {
  require_sample(s);
  const est::BakryQian id(k);
  const double n = s.dim;
  const double lhs =
      s.grad_sq - std::sqrt(n * k) * std::sqrt(s.grad_sq + n / (2.0 * s.t) + 0.25 * n * k);
  return outcome(id, s.dt_log + n / (2.0 * s.t), lhs, tol);
}

double sharp_h3_bound(double t, double dt_log, double radicand_tol) {
  const double radicand = dt_log + 1.5 / t + 1.0;
  const double root = checked_sqrt(radicand, dt_log, radicand_tol, "sharp_h3_bound");
  return root + z_function(2.0 * t * root);
}

double sharp_h3_simple_bound(double t, double dt_log, double radicand_tol) {
  const double radicand = dt_log + 1.5 / t + 1.0;
  return checked_sqrt(radicand, dt_log, radicand_tol, "sharp_h3_simple_bound") + 1.0;
}

CheckOutcome sharp_h3_check(const SolutionSample& s, double tol) {
  require_sample(s);
  require_dim3(s, "sharp_h3");
  const double radicand = s.dt_log + 1.5 / s.t + 1.0;
  try {
    return outcome(est::SharpH3{}, sharp_h3_bound(s.t, s.dt_log), std::sqrt(s.grad_sq), tol);
  } catch (const DomainError&) {
    return radicand_violation(est::SharpH3{}, radicand, 1.5 / s.t + 1.0, tol);
  }
}

CheckOutcome sharp_h3_simple_check(const SolutionSample& s, double tol) {
  require_sample(s);
  require_dim3(s, "sharp_h3_simple");
  const double radicand = s.dt_log + 1.5 / s.t + 1.0;
  try {
    return outcome(est::SharpH3Simple{}, sharp_h3_simple_bound(s.t, s.dt_log),
                   std::sqrt(s.grad_sq), tol);
  } catch (const DomainError&) {
    return radicand_violation(est::SharpH3Simple{}, radicand, 1.5 / s.t + 1.0, tol);
  }
}

double linearization_slope(double t, double r0) {
  const double zp = z_derivative(r0);
  const double z_r = z_over_r(r0);
  return 1.0 + 2.0 * (zp + z_r) * t + 4.0 * z_r * zp * t * t;
}

CheckOutcome linearized_h3_check(const SolutionSample& s, double r0, double tol) {
  require_sample(s);
  require_dim3(s, "linearized_h3");
  const est::LinearizedH3 id(r0);
  const double t = s.t;
  const double tangent_value = r0 / (2.0 * t) + z_function(r0);
  const double rhs = linearization_slope(t, r0) * (s.dt_log + 1.5 / t + 1.0 - r0 * r0 / (4.0 * t * t)) +
                     tangent_value * tangent_value;
  return outcome(id, rhs, s.grad_sq, tol);
}

double general_h_bound(int n, double t, double dt_log, double radicand_tol) {
  if (n < 2) throw UsageError("general_h_bound: n must be >= 2");
  const double nm1 = n - 1.0;
  const double radicand = dt_log + time_constant(n) / (2.0 * t) + 0.25 * nm1 * nm1;
  return checked_sqrt(radicand, dt_log, radicand_tol, "general_h_bound") + 0.5 * nm1;
}

CheckOutcome general_h_check(const SolutionSample& s, double tol) {
  require_sample(s);
  const EstimateId id = s.dim % 2 == 1 ? EstimateId(est::GeneralOdd{}) : est::GeneralEven{};
  const double nm1 = s.dim - 1.0;
  const double floor = time_constant(s.dim) / (2.0 * s.t) + 0.25 * nm1 * nm1;
  try {
    return outcome(id, general_h_bound(s.dim, s.t, s.dt_log), std::sqrt(s.grad_sq), tol);
  } catch (const DomainError&) {
    return radicand_violation(id, s.dt_log + floor, floor, tol);
  }
}

CheckOutcome beta_family_check(const SolutionSample& s, double beta, double tol) {
  require_sample(s);
  const est::BetaFamily id(beta);
  const double nm1 = s.dim - 1.0;
  const double rhs = time_constant(s.dim) / (2.0 * s.t) + nm1 * nm1 / (4.0 * (1.0 - beta));
  return outcome(id, rhs, beta * s.grad_sq - s.dt_log, tol);
}

double log_harnack_factor(int n, double t1, double t2, double r) {
  if (!(t1 > 0.0) || !(t1 < t2)) throw UsageError("harnack_factor: need 0 < t1 < t2");
  if (!(r >= 0.0)) throw DomainError("harnack_factor: r must be >= 0");
  if (n < 2) throw UsageError("harnack_factor: n must be >= 2");
  const double dt = t2 - t1;
  const double nm1 = n - 1.0;
  return 0.5 * time_constant(n) * std::log(t2 / t1) + r * r / (4.0 * dt) + 0.25 * nm1 * nm1 * dt +
         0.5 * nm1 * r;
}

double harnack_factor(int n, double t1, double t2, double r) {
  return std::exp(log_harnack_factor(n, t1, t2, r));
}

CheckOutcome dt_lower_check(const SolutionSample& s, double tol, bool odd_constant) {
  require_sample(s);
  const double nm1 = s.dim - 1.0;
  const int m = odd_constant ? s.dim : time_constant(s.dim);
  const double rhs = m / (2.0 * s.t) + 0.25 * nm1 * nm1;
  return outcome(est::DtLower{odd_constant}, rhs, -s.dt_log, tol);
}

double h3_dy_dx(double t, double r) { return linearization_slope(t, r); }

double h3_first_bracket(double r) {
  return r * r * z_second_derivative(r) + r * z_derivative(r) - z_function(r);
}

double h3_second_bracket(double r) {
  const double z = z_function(r);
  const double zp = z_derivative(r);
  return r * z * z_second_derivative(r) + r * zp * zp - z * zp;
}

double h3_d2y_dx2(double t, double r) {
  if (!(r > 0.0)) throw DomainError("h3_d2y_dx2 needs r > 0");
  const double r3 = r * r * r;
  return 4.0 * t * t * t / r3 * h3_first_bracket(r) +
         8.0 * t * t * t * t / r3 * h3_second_bracket(r);
}

}  // namespace hypheat
