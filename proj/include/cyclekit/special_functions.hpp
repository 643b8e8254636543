#pragma once

namespace cyclekit {

// Modified Bessel functions of the first kind, orders 0 and 1.
// The *_scaled variants return e^{-|x|} I_nu(x) and stay finite for large
// arguments; the unscaled ones overflow near x ~ 713.
double bessel_i0(double x);
double bessel_i1(double x);
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series for x < a + 1, continued fraction otherwise.
double gamma_p(double a, double x);

// Ratio Gamma(num) / Gamma(den) evaluated through log-gamma; both arguments
// must be positive.
double gamma_ratio(double num, double den);

}  // namespace cyclekit
