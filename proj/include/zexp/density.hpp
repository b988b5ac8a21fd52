#pragma once
// Resonance functionals of the normalized area remainder
// g(u) = (psi_tilde(e^u) - e^{2u}/2) e^{-3u/2}: phase-matched integrals
// against a single zero frequency, the linear-growth fit they exhibit, an
// exact running sup, and a lower bound on the measure where |g| stays large.

#include <vector>

#include "zexp/mangoldt.hpp"

namespace zexp {

// Phase and amplitude a zero at ordinate t_rho contributes to g: the pair
// term equals -2 amplitude^2 sin(t_rho u + theta) with
// amplitude = ((3/4 - t^2)^2 + 4 t^2)^{-1/2}. Requires t_rho > 0.
struct ResonanceParams {
    double t_rho = 0.0;
    double theta = 0.0;
    double amplitude = 0.0;
};

ResonanceParams resonance_params(double t_rho);

// R(U) = int_0^U g(u) sin(t_rho u + theta) du, evaluated exactly per
// integer segment of e^u. Requires e^U within table coverage.
double resonance_integral(double U, const ResonanceParams& params,
                          const MangoldtTable& table);

struct ResonanceFit {
    double slope = 0.0;      // least-squares slope of R(U) over the window
    double predicted = 0.0;  // -amplitude, the self-term prediction
    double ratio = 0.0;      // slope / predicted
    double c0 = 0.0;         // sup over the grid of |R(U) - slope U|
};

// Fits R(U) ~ slope * U on U in [2, horizon] sampled at the given step.
// Steps much coarser than 0.01 alias against the zero spacing, so the
// default stays at 0.01.
ResonanceFit resonance_slope(const ResonanceParams& params,
                             const MangoldtTable& table, double horizon = 12.0,
                             double step = 0.01);

// sup of |g| over [0, u_max], located exactly: per integer segment the only
// interior critical point solves y^2 + 2 P1 y - 6 P2 = 0, so the sup over
// any grid of the given step is subsumed. step must lie in (0, 1e-3].
double sup_estimate_C1(double u_max, double step, const MangoldtTable& table);

struct MeasureEstimate {
    double x_threshold = 0.0;
    double horizon = 0.0;
    double measure = 0.0;    // Lebesgue measure of {u in [0, horizon]: |g| > x}
    double bound_rhs = 0.0;  // ((A - x) horizon - C0) / (C1 - x)
    double c1 = 0.0;
    double c0 = 0.0;
    bool holds = false;      // measure >= bound_rhs
    bool vacuous = false;    // x >= amplitude, nothing is claimed
};

// Chebyshev-style density bound: |R(U)| >= A U - C0 forces |g| above x on a
// set of measure at least ((A - x) horizon - C0)/(C1 - x). The measure is
// scanned at step 1e-3 with tenfold refinement around each level crossing.
// Requires x > 0; x >= amplitude only flags the result vacuous.
MeasureEstimate measure_bound_check(double x, double horizon, double t_rho,
                                    const MangoldtTable& table);

}  // namespace zexp
