#pragma once

#include <complex>

#include "zexp/quadrature.hpp"

namespace zexp {

using Complex = std::complex<double>;

// h(w) = integral of (e^v - 1)/v dv along [0, w]. Entire in w. Power series
// inside |w| <= 25; outside, h(w) = -gamma - Log(-w) - E1(-w) with E1 by
// continued fraction (needs w off the positive real axis, where the log form
// has its cut; all callers keep Im w > 0).
Complex exp_integral_h(Complex w);

// f2(T, X) = integral over [1, X] of sin(T ln y)/(sqrt(y) ln y) dy.
// Exact route: Im h((1/2 + iT) ln X).
double inner_log_integral_exact(double T, double X);

// Quadrature route after u = ln y: integrand e^{u/2} sin(Tu)/u on [0, ln X],
// with the removable u -> 0 endpoint expanded in series below 1e-4.
double inner_log_integral_quad(double T, double X, const QuadratureSpec& spec);

}  // namespace zexp
