#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "hypheat/errors.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/special.hpp"

using namespace hypheat;
using boost::math::quadrature::gauss_kronrod;

namespace {

const double kPi = std::numbers::pi;

void check_fd(int n, double t, double r) {
  CAPTURE(n);
  CAPTURE(t);
  CAPTURE(r);
  const KernelEval k = kernel(n, t, r);
  const double ht = 1e-4 * std::max(1.0, t);
  auto in_t = [&](double tt) { return kernel(n, tt, r).log_k; };
  CHECK(std::abs(k.dt_log_k - oracle::fd5(in_t, t, ht)) <= 1e-6 * (1 + std::abs(k.dt_log_k)));
  if (r > 0) {
    const double hr = std::min(1e-4 * std::max(1.0, r), r / 3);
    auto in_r = [&](double rr) { return kernel(n, t, rr).log_k; };
    CHECK(std::abs(k.dr_log_k - oracle::fd5(in_r, r, hr)) <= 1e-6 * (1 + std::abs(k.dr_log_k)));
  }
}

}  // namespace

TEST_CASE("H^3 closed form") {
  const KernelEval a = kernel_h3(1.0, 0.0);
  CHECK(a.log_k == doctest::Approx(-1.5 * std::log(4 * kPi) - 1.0).epsilon(1e-15));
  CHECK(a.dt_log_k == -2.5);
  CHECK(a.dr_log_k == 0.0);
  const KernelEval b = kernel_h3(1.0, 2.0);
  CHECK(b.dt_log_k == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(b.dr_log_k == doctest::Approx(-(1.0 + z_function(2.0))).epsilon(1e-15));
  for (double t : {0.05, 1.0, 10.0}) {
    for (double r : {0.0, 0.3, 4.0, 20.0}) {
      const KernelEval k = kernel_h3(t, r);
      const double y = r / (2 * t) + z_function(r);
      CHECK(k.dr_log_k * k.dr_log_k == doctest::Approx(y * y).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(kernel_h3(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_h3(1.0, -1.0), DomainError);
}

TEST_CASE("dimension range") {
  CHECK_THROWS_AS(kernel(12, 1.0, 1.0), UsageError);
  CHECK_THROWS_AS(kernel(13, 1.0, 1.0), UsageError);
  CHECK_THROWS_AS(kernel(8, 1.0, 1.0), UsageError);
  CHECK_THROWS_AS(kernel(1, 1.0, 1.0), UsageError);
  CHECK_THROWS_AS(kernel_odd(4, 1.0, 1.0), UsageError);
  CHECK_NOTHROW(kernel(11, 1.0, 1.0));
  CHECK_NOTHROW(kernel(6, 1.0, 1.0));
}

TEST_CASE("odd recursion reproduces the H^3 closed form") {
  for (double t : {0.05, 0.5, 2.0, 10.0}) {
    for (double r : {0.0, 1e-3, 0.5, 0.999, 1.001, 3.0, 20.0}) {
      const KernelEval a = kernel_odd(3, t, r);
      const KernelEval b = kernel_h3(t, r);
      CHECK(std::abs(a.log_k - b.log_k) <= 1e-12);
      CHECK(a.dr_log_k == doctest::Approx(b.dr_log_k).epsilon(1e-12));
      CHECK(a.dt_log_k == doctest::Approx(b.dt_log_k).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha_5 from one descent step") {
  for (double t : {0.1, 1.0, 7.0}) {
    for (double r : {0.5, 1.0, 2.5, 8.0}) {
      const double s = std::sinh(r);
      const double ref = (r / s) * (r / s) + 2 * t * (r * std::cosh(r) - s) / (s * s * s);
      CHECK(alpha_profile(5, t, r).alpha == doctest::Approx(ref).epsilon(1e-12));
    }
  }
  CHECK(alpha_profile(5, 1.0, 0.0).alpha == doctest::Approx(1.0 + 2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("series and closed-form branches agree at the switch") {
  for (int n = 5; n <= kMaxOddDim; n += 2) {
    for (double t : {0.05, 1.0, 10.0}) {
      for (double r : {0.9, 1.0, 1.2}) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(r);
        const AlphaEval a = detail::odd_alpha_series(n, t, r);
        const AlphaEval b = detail::odd_alpha_closed_form(n, t, r);
        CHECK(std::abs(a.log_alpha - b.log_alpha) <= 1e-12);
        CHECK(std::abs(a.dr_log_alpha - b.dr_log_alpha) <= 1e-10 * (1 + std::abs(b.dr_log_alpha)));
        CHECK(std::abs(a.dt_log_alpha - b.dt_log_alpha) <= 1e-10 * (1 + std::abs(b.dt_log_alpha)));
      }
    }
  }
}

TEST_CASE("log-derivatives match finite differences") {
  for (int n : {2, 3, 4, 5, 6, 7, 9, 11}) {
    for (double t : {0.05, 0.7, 10.0}) {
      for (double r : {1e-3, 0.4, 1.0, 3.0, 15.0}) check_fd(n, t, r);
    }
  }
}

TEST_CASE("mass normalization") {
  for (int n : {2, 3, 5, 7}) {
    for (double t : {0.1, 1.0, 10.0}) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(std::abs(oracle::kernel_mass(n, t) - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("even kernels") {
  const KernelEval k = kernel_even(2, 1.0, 0.0);
  CHECK(k.dr_log_k == 0.0);
  CHECK(k.method == KernelMethod::even_quadrature);
  // K_{n+2} = -e^{-nt} / (2 pi sinh r) dK_n/dr between the even kernels.
  for (int n : {2, 4}) {
    for (double t : {0.1, 1.0, 5.0}) {
      for (double r : {0.2, 1.0, 4.0}) {
        const KernelEval lo = kernel(n, t, r);
        const KernelEval hi = kernel(n + 2, t, r);
        const double log_ref =
            lo.log_k + std::log(-lo.dr_log_k) - n * t - std::log(2 * kPi) - log_sinh(r);
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(r);
        CHECK(std::abs(hi.log_k - log_ref) <= 1e-7);
      }
    }
  }
}

TEST_CASE("semigroup property in H^3") {
  const double t1 = 0.4, t2 = 0.7, rho = 1.3;
  auto inner = [&](double s) {
    auto f = [&](double th) {
      const double c = std::cosh(s) * std::cosh(rho) - std::sinh(s) * std::sinh(rho) * std::cos(th);
      const double d = std::acosh(std::max(c, 1.0));
      return std::exp(kernel_h3(t1, s).log_k + kernel_h3(t2, d).log_k) * std::sin(th);
    };
    return 2 * kPi * std::sinh(s) * std::sinh(s) *
           gauss_kronrod<double, 31>::integrate(f, 0.0, kPi, 8, 1e-10);
  };
  const double total = gauss_kronrod<double, 31>::integrate(inner, 0.0, 15.0, 10, 1e-10);
  const double ref = std::exp(kernel_h3(t1 + t2, rho).log_k);
  CHECK(std::abs(total - ref) <= 1e-4 * ref);
}

TEST_CASE("alpha profile properties") {
  for (double t : {0.05, 1.0, 10.0}) {
    for (double r : {0.0, 0.5, 5.0}) {
      const AlphaEval a3 = alpha_profile(3, t, r);
      const double ref = r == 0.0 ? 1.0 : r / std::sinh(r);
      CHECK(a3.alpha == doctest::Approx(ref).epsilon(1e-14));
      CHECK(a3.dt_log_alpha == 0.0);
      for (int n : {2, 3, 4, 5, 7, 9}) {
        const AlphaEval a = alpha_profile(n, t, r);
        CAPTURE(n);
        CHECK(a.alpha > 0.0);
        CHECK(-a.dr_log_alpha >= -1e-12);
        CHECK(-a.dr_log_alpha <= 0.5 * (n - 1) + 1e-8);
      }
    }
  }
}

TEST_CASE("kernels stay positive and finite far out") {
  for (int n : {2, 3, 5, 6, 11}) {
    const KernelEval k = kernel(n, 0.05, 20.0);
    CHECK(std::isfinite(k.log_k));
    CHECK(std::isfinite(k.dr_log_k));
    CHECK(std::isfinite(k.dt_log_k));
  }
}
