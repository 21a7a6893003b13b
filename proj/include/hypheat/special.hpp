#pragma once

namespace hypheat {

/// Z(r) = coth r - 1/r, the negative radial log-derivative of r / sinh r.
/// Maclaurin polynomial below r = 1e-2; Z(0) = 0 and 0 <= Z < 1.
double z_function(double r);

/// Z'(r) = 1/r^2 - 1/sinh^2 r; Z'(0) = 1/3.
double z_derivative(double r);

/// Z''(r) = 2 cosh r / sinh^3 r - 2/r^3.
double z_second_derivative(double r);

/// Z(r)/r, continuous at 0 with value 1/3.
double z_over_r(double r);

/// log(r / sinh r), continuous at 0 with value 0.
double log_r_over_sinh(double r);

/// log(sinh r) for r > 0, safe for large r.
double log_sinh(double r);

}  // namespace hypheat
