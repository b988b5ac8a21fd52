#pragma once

#include <complex>

namespace zexp {

using Complex = std::complex<double>;

// Principal log-Gamma whose imaginary part is continuous along any vertical
// line Re z = c > 0 traversed upward from the real axis (the convention the
// smooth zero-count requires). Re z <= 0 is reached by reflection; there the
// imaginary part is only defined modulo 2*pi, which callers that exponentiate
// (the functional-equation product check) are insensitive to.
Complex log_gamma(Complex z);

// Gamma'/Gamma by shifted Stirling.
Complex digamma(Complex z);

// Re Gamma'/Gamma(1/2 + i t).
double digamma_re_half_line(double t);

// arctan(sinh(x)) without overflowing sinh for large x.
double atan_sinh(double x);

}  // namespace zexp
