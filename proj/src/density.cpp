#include "zexp/density.hpp"

#include <algorithm>
#include <cmath>

#include "zexp/errors.hpp"
#include "zexp/numeric.hpp"
#include "zexp/segments.hpp"

namespace zexp {

ResonanceParams resonance_params(double t_rho) {
    if (!(t_rho > 0.0))
        throw domain_error("resonance_params: t_rho must be positive");
    double A = 0.75 - t_rho * t_rho;
    ResonanceParams p;
    p.t_rho = t_rho;
    p.theta = std::atan(A / (2.0 * t_rho));
    p.amplitude = 1.0 / std::sqrt(A * A + 4.0 * t_rho * t_rho);
    return p;
}

double resonance_integral(double U, const ResonanceParams& params,
                          const MangoldtTable& table) {
    return resonance_integral_exact(U, params.t_rho, params.theta, table);
}

ResonanceFit resonance_slope(const ResonanceParams& params,
                             const MangoldtTable& table, double horizon,
                             double step) {
    if (!(step > 0.0))
        throw domain_error("resonance_slope: step must be positive");
    if (!(horizon > 2.0 + 10.0 * step))
        throw domain_error("resonance_slope: horizon leaves no fit window past U = 2");
    std::vector<double> grid;
    for (double u = 0.0; u <= horizon + 1e-12; u += step) grid.push_back(u);
    std::vector<double> R =
        resonance_cumulative(grid, params.t_rho, params.theta, table);

    // Least squares R ~ slope U + intercept over U >= 2.
    KahanSum su, sr, suu, sur;
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 2.0) continue;
        su.add(grid[i]);
        sr.add(R[i]);
        suu.add(grid[i] * grid[i]);
        sur.add(grid[i] * R[i]);
        ++count;
    }
    double n = static_cast<double>(count);
    double denom = n * suu.value() - su.value() * su.value();
    ResonanceFit fit;
    fit.slope = (n * sur.value() - su.value() * sr.value()) / denom;
    fit.predicted = -params.amplitude;
    fit.ratio = fit.slope / fit.predicted;
    for (std::size_t i = 0; i < grid.size(); ++i)
        fit.c0 = std::max(fit.c0, std::abs(R[i] - fit.slope * grid[i]));
    return fit;
}

double sup_estimate_C1(double u_max, double step, const MangoldtTable& table) {
    if (!(step > 0.0 && step <= 1e-3))
        throw domain_error("sup_estimate_C1: step must lie in (0, 1e-3]");
    return sup_g_exact(u_max, table);
}

MeasureEstimate measure_bound_check(double x, double horizon, double t_rho,
                                    const MangoldtTable& table) {
    if (!(x > 0.0))
        throw domain_error("measure_bound_check: threshold x must be positive");
    if (!(horizon > 2.1))
        throw domain_error("measure_bound_check: horizon must exceed 2.1");
    ResonanceParams params = resonance_params(t_rho);

    MeasureEstimate est;
    est.x_threshold = x;
    est.horizon = horizon;
    est.vacuous = x >= params.amplitude;
    est.c1 = sup_g_exact(horizon, table);

    // Deviation constant against the predicted slope -A, so the growth
    // inequality |R(U)| >= A U - C0 is certified on the grid.
    {
        std::vector<double> grid;
        for (double u = 0.0; u <= horizon + 1e-12; u += 0.01) grid.push_back(u);
        std::vector<double> R =
            resonance_cumulative(grid, params.t_rho, params.theta, table);
        for (std::size_t i = 0; i < grid.size(); ++i)
            est.c0 = std::max(est.c0,
                              std::abs(R[i] + params.amplitude * grid[i]));
    }

    // Measure of {|g| > x} at step 1e-3, refining tenfold where |g| - x
    // changes sign across a cell.
    const double du = 1e-3;
    std::int64_t n_cells = static_cast<std::int64_t>(std::llround(horizon / du));
    double h_prev = std::abs(g_of_u(0.0, table)) - x;
    KahanSum measure;
    for (std::int64_t k = 1; k <= n_cells; ++k) {
        double h = std::abs(g_of_u(static_cast<double>(k) * du, table)) - x;
        if (h_prev > 0.0 && h > 0.0) {
            measure.add(du);
        } else if (h_prev > 0.0 || h > 0.0) {
            double u0 = static_cast<double>(k - 1) * du;
            for (int j = 0; j < 10; ++j) {
                double um = u0 + (j + 0.5) * du / 10.0;
                if (std::abs(g_of_u(um, table)) - x > 0.0) measure.add(du / 10.0);
            }
        }
        h_prev = h;
    }
    est.measure = measure.value();
    est.bound_rhs = ((params.amplitude - x) * horizon - est.c0) / (est.c1 - x);
    est.holds = est.measure >= est.bound_rhs;
    return est;
}

}  // namespace zexp
