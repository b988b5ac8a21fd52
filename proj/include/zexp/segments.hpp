#pragma once

#include <complex>
#include <functional>

#include "zexp/mangoldt.hpp"

namespace zexp {

using Complex = std::complex<double>;

// psi_tilde is piecewise linear-in-x with quadratic deviation: on [m, m+1),
// psi_tilde(x) = P1[m] x - P2[m], so delta_tilde(x) = P1 x - P2 - x^2/2 and
// delta(x) = P1 - x. Integrals of these against power or exponential kernels
// have closed forms per integer segment; the routines below accumulate the
// segment contributions compensated, in segment order, with fixed chunking,
// so results are bit-identical for every thread count.

// int_a^b delta_tilde(x) x^{-w-2} dx, exact per segment.
Complex delta_tilde_power_integral(double a, double b, Complex w,
                                   const MangoldtTable& table, int threads = 0);

// int_a^b delta(x) x^{-w-1} dx, exact per segment.
Complex delta_power_integral(double a, double b, Complex w,
                             const MangoldtTable& table, int threads = 0);

// int_0^U g(u) sin(tau u + theta) du with g(u) = delta_tilde(e^u) e^{-3u/2},
// exact per segment (three exponential-times-sine antiderivatives).
double resonance_integral_exact(double U, double tau, double theta,
                                const MangoldtTable& table);

// Values of int_0^{U_i} g(u) sin(tau u + theta) du over an ascending grid,
// computed in one sweep over segments.
std::vector<double> resonance_cumulative(const std::vector<double>& u_grid,
                                         double tau, double theta,
                                         const MangoldtTable& table);

// g(u) = delta_tilde(e^u) e^{-3u/2} point query.
double g_of_u(double u, const MangoldtTable& table);

// Exact sup of |g| over [0, u_max]: each segment's critical point
// y* = -P1 + sqrt(P1^2 + 6 P2) joins the endpoint candidates.
double sup_g_exact(double u_max, const MangoldtTable& table);

// Fixed Gauss-Legendre panels with integer breakpoints (for integrands that
// are smooth between consecutive integers, like kernel x delta_tilde).
double integrate_integer_segments(const std::function<double(double)>& f,
                                  double a, double b, int gl_order,
                                  int threads = 0);

}  // namespace zexp
