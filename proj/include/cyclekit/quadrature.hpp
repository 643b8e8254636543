#pragma once

#include <functional>

namespace cyclekit {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
};

// Adaptive Gauss-Kronrod 15(7) on a finite interval.  The integrand is never
// evaluated at the endpoints, so integrable endpoint singularities are fine.
// Throws PrecisionError when the subdivision budget is exhausted before the
// error estimate drops below max(abs_tol, rel_tol * |I|).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

// Integral over [a, infinity) via the rational map x = a + t/(1-t).
double integrate_upper(const std::function<double(double)>& f, double a,
                       const QuadratureOptions& opts = {});

}  // namespace cyclekit
