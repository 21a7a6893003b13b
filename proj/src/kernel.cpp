#include "hypheat/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hypheat/errors.hpp"
#include "hypheat/special.hpp"

namespace hypheat {

namespace {

void require_time_radius(double t, double r) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("kernel: t must be positive and finite");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("kernel: r must be nonnegative");
}

double log_four_pi_t(double t) { return std::log(4.0 * std::numbers::pi * t); }

}  // namespace

std::string_view to_string(KernelMethod m) {
  switch (m) {
    case KernelMethod::closed_form_h3: return "closed_form_h3";
    case KernelMethod::odd_recursion: return "odd_recursion";
    case KernelMethod::even_quadrature: return "even_quadrature";
  }
  return "unknown";
}

bool dimension_supported(int n) noexcept {
  if (n % 2 == 1) return n >= 3 && n <= kMaxOddDim;
  return n >= 2 && n <= kMaxEvenDim;
}

KernelEval kernel_h3(double t, double r) {
  require_time_radius(t, r);
  KernelEval k;
  k.dim = 3;
  k.t = t;
  k.r = r;
  k.log_k = -1.5 * log_four_pi_t(t) - r * r / (4.0 * t) - t + log_r_over_sinh(r);
  k.dr_log_k = -(r / (2.0 * t) + z_function(r));
  k.dt_log_k = -1.5 / t + r * r / (4.0 * t * t) - 1.0;
  k.method = KernelMethod::closed_form_h3;
  return k;
}

KernelEval kernel_odd(int n, double t, double r) {
  if (n % 2 == 0 || n < 3 || n > kMaxOddDim) {
    throw UsageError("kernel_odd: unsupported dimension " + std::to_string(n) +
                     " (odd 3.." + std::to_string(kMaxOddDim) + ")");
  }
  require_time_radius(t, r);
  const AlphaEval a = detail::odd_alpha(n, t, r);
  const double nm1 = n - 1.0;
  KernelEval k;
  k.dim = n;
  k.t = t;
  k.r = r;
  k.log_k = -0.5 * n * log_four_pi_t(t) - r * r / (4.0 * t) - 0.25 * nm1 * nm1 * t + a.log_alpha;
  k.dr_log_k = -r / (2.0 * t) + a.dr_log_alpha;
  k.dt_log_k = -0.5 * n / t - 0.25 * nm1 * nm1 + r * r / (4.0 * t * t) + a.dt_log_alpha;
  k.method = KernelMethod::odd_recursion;
  return k;
}

KernelEval kernel(int n, double t, double r) {
  if (!dimension_supported(n)) {
    throw UsageError("unsupported dimension " + std::to_string(n) + " (odd 3.." +
                     std::to_string(kMaxOddDim) + ", even 2.." + std::to_string(kMaxEvenDim) +
                     ")");
  }
  if (n == 3) return kernel_h3(t, r);
  if (n % 2 == 1) return kernel_odd(n, t, r);
  return kernel_even(n, t, r);
}

AlphaEval alpha_from_kernel(const KernelEval& k) {
  const double n = k.dim;
  const double t = k.t;
  const double r = k.r;
  AlphaEval a;
  a.dim = k.dim;
  a.t = t;
  a.r = r;
  a.log_alpha = k.log_k + 0.5 * n * log_four_pi_t(t) + r * r / (4.0 * t) +
                0.25 * (n - 1.0) * (n - 1.0) * t;
  a.alpha = std::exp(a.log_alpha);
  a.dr_log_alpha = k.dr_log_k + r / (2.0 * t);
  a.dt_log_alpha = k.dt_log_k + 0.5 * n / t - r * r / (4.0 * t * t) + 0.25 * (n - 1.0) * (n - 1.0);
  return a;
}

AlphaEval alpha_profile(int n, double t, double r) {
  if (!dimension_supported(n)) {
    throw UsageError("alpha_profile: unsupported dimension " + std::to_string(n));
  }
  require_time_radius(t, r);
  if (n == 3) {
    // alpha_3 = r / sinh r carries no time dependence at all.
    AlphaEval a;
    a.dim = 3;
    a.t = t;
    a.r = r;
    a.log_alpha = log_r_over_sinh(r);
    a.alpha = std::exp(a.log_alpha);
    a.dr_log_alpha = -z_function(r);
    a.dt_log_alpha = 0.0;
    return a;
  }
  if (n % 2 == 1) return detail::odd_alpha(n, t, r);
  return alpha_from_kernel(kernel_even(n, t, r));
}

}  // namespace hypheat
