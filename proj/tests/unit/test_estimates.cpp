#include <doctest.h>

#include <cmath>

#include "hypheat/errors.hpp"
#include "hypheat/estimates.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/special.hpp"

using namespace hypheat;

namespace {

SolutionSample h3_sample(double t, double r) {
  const KernelEval k = kernel_h3(t, r);
  return SolutionSample{t, k.dr_log_k * k.dr_log_k, k.dt_log_k, 3};
}

SolutionSample sample(int n, double t, double r) {
  const KernelEval k = kernel(n, t, r);
  return SolutionSample{t, k.dr_log_k * k.dr_log_k, k.dt_log_k, n};
}

double coth(double x) { return 1.0 / std::tanh(x); }

}  // namespace

TEST_CASE("Li-Yau") {
  // Euclidean fundamental solution in R^3 is the equality case for alpha = 1, k = 0.
  const double t = 0.7, r = 1.9;
  const SolutionSample euclid{t, r * r / (4 * t * t), -1.5 / t + r * r / (4 * t * t), 3};
  CHECK(std::abs(li_yau_check(euclid, 1.0, 0.0, 0).slack) <= 1e-14);
  CHECK(li_yau_check(h3_sample(1.0, 1.0), 2.0, 2.0, 0).slack >= 0.0);
  const SolutionSample zero{1.0, 0.0, 0.0, 3};
  CHECK(li_yau_check(zero, 2.0, 2.0, 0).slack == doctest::Approx(3 * 4 / 2.0 + 3 * 4 * 2 / 2.0));
  CHECK_THROWS_AS(est::LiYau(1.0, 2.0), UsageError);
  CHECK_THROWS_AS(est::LiYau(0.5), UsageError);
  CHECK_THROWS_AS(li_yau_check(zero, 1.0, 1.0, 0), UsageError);
}

TEST_CASE("Bakry Phi") {
  const double k = 2.0, t = 1.0;
  CHECK(bakry_phi(t, 0.0, k) == doctest::Approx(2 * (coth(2.0) - 1)).epsilon(1e-14));
  const double limit = 1 / t - k / 2;
  CHECK(bakry_phi(t, 1 - 1e-8, k) == doctest::Approx(limit).epsilon(1e-6));
  CHECK(bakry_phi(t, 1 + 1e-8, k) == doctest::Approx(limit).epsilon(1e-6));
  CHECK(std::abs(bakry_phi(t, 1 - 1e-12, k) - bakry_phi(t, 1 + 1e-12, k)) <= 1e-6);
  const double pole = 1 + M_PI * M_PI / (k * k * t * t);
  CHECK_THROWS_AS(bakry_phi(t, pole, k), DomainError);
  CHECK_THROWS_AS(est::BakryPhi(0.0), UsageError);
  // Negative k (the signed lower bound for H^n) is accepted.
  CHECK(std::isfinite(bakry_phi(t, 0.5, -2.0)));
}

TEST_CASE("Yau and Bakry-Qian") {
  const SolutionSample zero{1.0, 0.0, 0.0, 3};
  const double n = 3, k = 2;
  CHECK(yau_check(zero, k, 0).slack ==
        doctest::Approx(n / 2 + std::sqrt(2 * n * k) * std::sqrt(n / 2 + 2 * n * k)));
  CHECK(bakry_qian_check(zero, k, 0).slack ==
        doctest::Approx(n / 2 + std::sqrt(n * k) * std::sqrt(n / 2 + n * k / 4)));
  for (double t : {0.05, 0.5, 1.0, 5.0}) {
    for (double r : {0.0, 0.5, 3.0, 15.0}) {
      const SolutionSample s = h3_sample(t, r);
      const CheckOutcome y = yau_check(s, 2.0, 1e-8);
      CHECK(y.holds);
      CHECK(bakry_qian_check(s, 2.0, 1e-8).holds);
    }
  }
  // Small-k limit of Bakry-Qian approaches Li-Yau with alpha = 1.
  const SolutionSample s = h3_sample(1.0, 1.0);
  CHECK(std::abs(bakry_qian_check(s, 1e-8, 0).slack - li_yau_check(s, 1.0, 0.0, 0).slack) <= 1e-3);
}

TEST_CASE("sharp H^3 bound") {
  const double b = sharp_h3_bound(1.0, -1.5);
  CHECK(b == doctest::Approx(1.0 + coth(2.0) - 0.5).epsilon(1e-15));
  CHECK(b == doctest::Approx(1.0 + z_function(2.0)).epsilon(1e-15));
  CHECK(sharp_h3_bound(2.0, -0.75 - 1.0) == 0.0);
  CHECK(sharp_h3_simple_bound(1.0, -1.5) == doctest::Approx(2.0));
  CHECK_THROWS_AS(sharp_h3_bound(1.0, -3.0), DomainError);
  for (double t : {0.05, 1.0, 10.0}) {
    for (double r : {0.0, 1e-3, 0.7, 4.0, 20.0}) {
      const SolutionSample s = h3_sample(t, r);
      CHECK(std::abs(std::sqrt(s.grad_sq) - sharp_h3_bound(t, s.dt_log)) <= 1e-10);
    }
  }
  // A sample below the admissible time derivative is a violation, not an error.
  const CheckOutcome o = sharp_h3_check(SolutionSample{1.0, 0.0, -3.0, 3}, 1e-8);
  CHECK_FALSE(o.holds);
  CHECK(o.slack < 0);
}

TEST_CASE("monotonicity in dt_log") {
  for (double t : {0.1, 1.0, 10.0}) {
    double prev_h3 = -1, prev_g5 = -1;
    for (int i = 0; i < 200; ++i) {
      const double x = 0.05 * i;
      const double h3 = sharp_h3_bound(t, -1.5 / t - 1 + x);
      const double g5 = general_h_bound(5, t, -2.5 / t - 4 + x);
      CHECK(h3 > prev_h3);
      CHECK(g5 > prev_g5);
      prev_h3 = h3;
      prev_g5 = g5;
    }
  }
}

TEST_CASE("linearized H^3 bound") {
  for (double t : {0.1, 1.0, 4.0}) {
    const double c = 1 + 2 * t / 3;
    CHECK(linearization_slope(t, 0.0) == doctest::Approx(c * c).epsilon(1e-14));
  }
  const CheckOutcome tangent = linearized_h3_check(h3_sample(1.0, 2.0), 2.0, 0);
  CHECK(std::abs(tangent.slack) <= 1e-12);
  for (double r0 : {0.0, 1.0, 5.0}) {
    for (double t : {0.05, 1.0, 10.0}) {
      for (double r : {0.0, 0.5, 2.0, 10.0}) {
        CHECK(linearized_h3_check(h3_sample(t, r), r0, 0).slack >= -1e-10);
      }
    }
  }
}

TEST_CASE("general bound and the dt lower bound") {
  CHECK(time_constant(3) == 3);
  CHECK(time_constant(2) == 3);
  CHECK(time_constant(6) == 7);
  for (double t : {0.2, 2.0}) {
    CHECK(general_h_bound(3, t, -0.5) == doctest::Approx(sharp_h3_simple_bound(t, -0.5)));
  }
  for (double t : {0.05, 1.0, 10.0}) {
    for (double r : {0.0, 0.5, 3.0}) {
      const SolutionSample s3 = h3_sample(t, r);
      CHECK(dt_lower_check(s3, 0).slack == doctest::Approx(r * r / (4 * t * t)).epsilon(1e-12));
      CHECK(general_h_check(sample(5, t, r), 1e-8).holds);
      CHECK(general_h_check(sample(2, t, r), 1e-8).holds);
      CHECK(dt_lower_check(sample(5, t, r), 0).slack >= -1e-8);
      CHECK(dt_lower_check(sample(2, t, r), 0).slack >= -1e-6);
    }
  }
  // The odd-dimensional constant fails on the hyperbolic plane at large t, r = 0.
  CHECK(dt_lower_check(sample(2, 10.0, 0.0), 0, true).slack < -1e-6);
}

TEST_CASE("beta family") {
  for (double t : {0.1, 1.0}) {
    const SolutionSample s = sample(5, t, 1.0);
    CHECK(beta_family_check(s, 0.0, 0).slack == doctest::Approx(dt_lower_check(s, 0).slack));
  }
  CHECK_THROWS_AS(est::BetaFamily(1.0), UsageError);
  // Any sample meeting the general bound satisfies every member of the family.
  for (double beta : {0.0, 0.1, 0.5, 0.9}) {
    for (double t : {0.05, 1.0, 10.0}) {
      for (double x : {0.0, 0.3, 5.0}) {
        const double dt = -2.5 / t - 4.0 + x;
        const double g = general_h_bound(5, t, dt);
        const SolutionSample s{t, g * g, dt, 5};
        CHECK(beta_family_check(s, beta, 0).slack >= -1e-10 * (1 + g * g));
      }
    }
  }
}

TEST_CASE("Harnack factor") {
  const double t1 = 0.5, t2 = 2.0;
  CHECK(harnack_factor(3, t1, t2, 0.0) ==
        doctest::Approx(std::pow(t2 / t1, 1.5) * std::exp(t2 - t1)).epsilon(1e-14));
  const double ratio = std::exp(kernel_h3(t1, 0).log_k - kernel_h3(t2, 0).log_k);
  CHECK(ratio == doctest::Approx(harnack_factor(3, t1, t2, 0.0)).epsilon(1e-12));
  CHECK(log_harnack_factor(3, 1.0, 1.0 + 1e-9, 1.0) > 1e8);
  CHECK_THROWS_AS(harnack_factor(3, 2.0, 1.0, 0.0), UsageError);
  CHECK_THROWS_AS(harnack_factor(3, 1.0, 1.0, 0.0), UsageError);
}

TEST_CASE("H^3 profile concavity pieces") {
  CHECK(h3_d2y_dx2(1.0, 0.5) <= 0.0);
  for (double r : {0.05, 0.5, 2.0, 9.0}) {
    CHECK(h3_first_bracket(r) < 0.0);
    CHECK(h3_second_bracket(r) < 0.0);
  }
}

TEST_CASE("estimate names") {
  for (const auto& name : estimate_names()) CHECK_NOTHROW(estimate_from_name(name));
  CHECK(estimate_name(estimate_from_name("general-h", {.dim = 4})) == "general_even");
  CHECK(estimate_name(estimate_from_name("sharp_h3")) == "sharp_h3");
  CHECK_THROWS_AS(estimate_from_name("bogus"), UsageError);
  CHECK_FALSE(estimate_applicable(est::SharpH3{}, 5));
  CHECK(estimate_applicable(est::GeneralEven{}, 2));
}
