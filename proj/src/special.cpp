#include "hypheat/special.hpp"

#include <cmath>
#include <numbers>

namespace hypheat {

namespace {

constexpr double kSeriesSwitch = 1e-2;
// Z'' has a worse cancellation (2/r^3) so it keeps its series longer.
constexpr double kSecondDerivativeSwitch = 1e-1;

}  // namespace

double z_function(double r) {
  if (r < kSeriesSwitch) {
    const double r2 = r * r;
    return r * (1.0 / 3.0 + r2 * (-1.0 / 45.0 + r2 * (2.0 / 945.0 - r2 / 4725.0)));
  }
  return 1.0 / std::tanh(r) - 1.0 / r;
}

double z_derivative(double r) {
  if (r < kSeriesSwitch) {
    const double r2 = r * r;
    return 1.0 / 3.0 + r2 * (-1.0 / 15.0 + r2 * (2.0 / 189.0 - r2 / 675.0));
  }
  const double s = std::sinh(r);
  return 1.0 / (r * r) - 1.0 / (s * s);
}

double z_second_derivative(double r) {
  if (r < kSecondDerivativeSwitch) {
    // Termwise second derivative of the Bernoulli series of coth r - 1/r.
    const double r2 = r * r;
    return r * (-2.0 / 15.0 +
                r2 * (8.0 / 189.0 +
                      r2 * (-2.0 / 225.0 + r2 * (16.0 / 10395.0 - r2 * (152020.0 / 638512875.0)))));
  }
  const double s = std::sinh(r);
  return 2.0 * std::cosh(r) / (s * s * s) - 2.0 / (r * r * r);
}

double z_over_r(double r) {
  if (r < kSeriesSwitch) {
    const double r2 = r * r;
    return 1.0 / 3.0 + r2 * (-1.0 / 45.0 + r2 * (2.0 / 945.0 - r2 / 4725.0));
  }
  return z_function(r) / r;
}

double log_sinh(double r) {
  if (r < 1.0) return std::log(std::sinh(r));
  return r + std::log1p(-std::exp(-2.0 * r)) - std::numbers::ln2;
}

double log_r_over_sinh(double r) {
  if (r < kSeriesSwitch) {
    const double r2 = r * r;
    return r2 * (-1.0 / 6.0 + r2 * (1.0 / 180.0 - r2 / 2835.0));
  }
  return std::log(r) - log_sinh(r);
}

}  // namespace hypheat
