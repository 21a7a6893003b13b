#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "hypheat/errors.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/special.hpp"

namespace hypheat {

namespace {

using Integrator = boost::math::quadrature::gauss_kronrod<double, 31>;

// Gaussian decay (in log units) past which the tail is dropped: 1e-20 of the
// peak plus headroom for the polynomial prefactors of K_{n+1}.
constexpr double kTailLogDrop = 60.0;

struct Piece {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
Piece integrate(F f, double a, double b, const QuadratureOptions& opts) {
  Piece p;
  if (!(b > a)) return p;
  double l1 = 0.0;
  p.value = Integrator::integrate(f, a, b, opts.max_depth, opts.relative_tolerance, &p.error, &l1);
  return p;
}

// s(v) solving cosh s = cosh r + v^2, written to stay accurate near s = 0.
double arc_from_v(double half_gap, double v) {
  const double x = half_gap + v * v;  // cosh s - 1
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

}  // namespace

KernelEval kernel_even(int n, double t, double r, const QuadratureOptions& opts) {
  if (n % 2 != 0 || n < 2 || n > kMaxEvenDim) {
    throw UsageError("kernel_even: unsupported dimension " + std::to_string(n) + " (even 2.." +
                     std::to_string(kMaxEvenDim) + ")");
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("kernel: t must be positive and finite");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("kernel: r must be nonnegative");

  const int up = n + 1;
  const double log_peak = kernel(up, t, r).log_k;
  const double log_sinh_r = r > 0.0 ? log_sinh(r) : 0.0;
  const double sh = std::sinh(0.5 * r);
  const double half_gap = 2.0 * sh * sh;  // cosh r - 1

  // sinh r / sinh s, the Jacobian ds/dr at fixed v.
  auto radial_ratio = [&](double s) {
    return r > 0.0 ? std::exp(log_sinh_r - log_sinh(s)) : 0.0;
  };

  // Near the singular endpoint: integrate in v, dv-measure.
  const double delta = 1.0;
  const double s_break = r + delta;
  const double v_break = std::sqrt(2.0 * std::sinh(0.5 * (s_break + r)) * std::sinh(0.5 * delta));

  // Far tail: integrate in s, dv = sinh s / (2 sqrt(cosh s - cosh r)) ds.
  const double s_max =
      std::max(s_break, std::sqrt(s_break * s_break + 4.0 * t * kTailLogDrop) + 2.0);
  auto log_dv_ds = [&](double s) {
    return log_sinh(s) - std::numbers::ln2 -
           0.5 * (std::numbers::ln2 + log_sinh(0.5 * (s + r)) + log_sinh(0.5 * (s - r)));
  };

  enum Which { kMass, kRadial, kTime };
  auto near = [&](Which which) {
    return [&, which](double v) {
      const double s = arc_from_v(half_gap, v);
      const KernelEval k = kernel(up, t, s);
      const double w = std::exp(k.log_k - log_peak);
      switch (which) {
        case kMass: return w;
        case kRadial: return w * k.dr_log_k * radial_ratio(s);
        case kTime: return w * k.dt_log_k;
      }
      return 0.0;
    };
  };
  auto far = [&](Which which) {
    return [&, which](double s) {
      const KernelEval k = kernel(up, t, s);
      const double w = std::exp(k.log_k - log_peak + log_dv_ds(s));
      switch (which) {
        case kMass: return w;
        case kRadial: return w * k.dr_log_k * radial_ratio(s);
        case kTime: return w * k.dt_log_k;
      }
      return 0.0;
    };
  };

  Piece totals[3];
  for (Which w : {kMass, kRadial, kTime}) {
    const Piece a = integrate(near(w), 0.0, v_break, opts);
    const Piece b = integrate(far(w), s_break, s_max, opts);
    totals[w] = Piece{a.value + b.value, a.error + b.error};
  }

  const double mass = totals[kMass].value;
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw NumericalAccuracyError("kernel_even: nonpositive mass integral", totals[kMass].error);
  }
  const double dr_log = totals[kRadial].value / mass;
  const double dt_log = 0.25 * (2.0 * n - 1.0) + totals[kTime].value / mass;

  const double err_mass = totals[kMass].error / mass;
  const double err_r = totals[kRadial].error / mass / (1.0 + std::abs(dr_log));
  const double err_t = totals[kTime].error / mass / (1.0 + std::abs(dt_log));
  const double achieved = std::max({err_mass, err_r, err_t});
  if (achieved > opts.relative_target) {
    throw NumericalAccuracyError("kernel_even: quadrature error " + std::to_string(achieved) +
                                     " above target at n=" + std::to_string(n) +
                                     " t=" + std::to_string(t) + " r=" + std::to_string(r),
                                 achieved);
  }

  KernelEval k;
  k.dim = n;
  k.t = t;
  k.r = r;
  k.log_k = 1.5 * std::numbers::ln2 + 0.25 * (2.0 * n - 1.0) * t + log_peak + std::log(mass);
  k.dr_log_k = dr_log;
  k.dt_log_k = dt_log;
  k.method = KernelMethod::even_quadrature;
  return k;
}

}  // namespace hypheat
