#pragma once

#include <string_view>

namespace hypheat {

enum class KernelMethod { closed_form_h3, odd_recursion, even_quadrature };

std::string_view to_string(KernelMethod m);

/// log K_n(t, r) and its first log-derivatives at one space-time point.
struct KernelEval {
  int dim = 0;
  double t = 0.0;
  double r = 0.0;
  double log_k = 0.0;
  double dr_log_k = 0.0;
  double dt_log_k = 0.0;
  KernelMethod method = KernelMethod::closed_form_h3;
};

/// The profile alpha_n in
///   K_n(t,r) = (4 pi t)^{-n/2} exp(-r^2/4t - (n-1)^2 t/4) alpha_n(t,r).
struct AlphaEval {
  int dim = 0;
  double t = 0.0;
  double r = 0.0;
  double alpha = 0.0;
  double log_alpha = 0.0;
  double dr_log_alpha = 0.0;
  double dt_log_alpha = 0.0;
};

inline constexpr int kMaxOddDim = 11;
inline constexpr int kMaxEvenDim = 6;

bool dimension_supported(int n) noexcept;

/// Closed form of the H^3 kernel, (4 pi t)^{-3/2} exp(-r^2/4t - t) r / sinh r.
KernelEval kernel_h3(double t, double r);

/// Odd n in [3, 11] from exact coefficient tables produced by the descent
/// recursion K_{n+2} = -e^{-nt} / (2 pi sinh r) d/dr K_n.
KernelEval kernel_odd(int n, double t, double r);

struct QuadratureOptions {
  double relative_target = 1e-8;  // accepted error of the returned values
  double relative_tolerance = 1e-11;  // requested from the integrator
  unsigned max_depth = 18;
};

/// Even n in [2, 6] by quadrature of the odd kernel one dimension up:
///   K_n(t,r) = sqrt(2) e^{(2n-1)t/4} int_r^inf K_{n+1}(t,s) sinh s (cosh s - cosh r)^{-1/2} ds
/// after cosh s = cosh r + v^2. Throws NumericalAccuracyError when the
/// error estimate exceeds `relative_target`.
KernelEval kernel_even(int n, double t, double r, const QuadratureOptions& opts = {});

/// Dispatch on n: closed form for 3, tables for other odd n, quadrature for even n.
KernelEval kernel(int n, double t, double r);

AlphaEval alpha_profile(int n, double t, double r);

/// alpha_n read off an existing kernel evaluation.
AlphaEval alpha_from_kernel(const KernelEval& k);

namespace detail {

/// alpha_n for odd n straight from the coefficient tables (no Gaussian factor).
AlphaEval odd_alpha(int n, double t, double r);

/// Radius below which odd_alpha switches to its Taylor expansion in r.
inline constexpr double kOddSeriesSwitch = 1.0;

/// Forces the closed-form branch regardless of r (for testing the switch).
AlphaEval odd_alpha_closed_form(int n, double t, double r);
AlphaEval odd_alpha_series(int n, double t, double r);

}  // namespace detail

}  // namespace hypheat
