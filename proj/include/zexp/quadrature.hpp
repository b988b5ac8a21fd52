#pragma once

#include <functional>
#include <vector>

namespace zexp {

// Tolerances and panel policy for the oscillation-aware engine.
// abs_tol governs panel refinement (halving must move the value by less);
// tail_tol is the acceptable reported truncation estimate for operations
// that cut an infinite integral or sum at finite range.
struct QuadratureSpec {
    double abs_tol = 1e-9;
    double tail_tol = 0.5;
    int panels_per_period = 8;
    int gl_order = 15;
    int max_halvings = 12;
};

// Integrates f over [a, b]. freq is the local oscillation rate in radians per
// unit of the variable; panels are sized so each period gets at least
// panels_per_period panels. Panel counts are then doubled until the value
// moves by at most abs_tol; failure to converge raises quadrature_error
// carrying the achieved estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double freq, const QuadratureSpec& spec);

// Same engine over a piecewise-smooth integrand: `edges` lists breakpoints
// (ascending, first = lower limit, last = upper limit); every panel stays
// inside one piece.
double integrate_edges(const std::function<double(double)>& f,
                       const std::vector<double>& edges, double freq,
                       const QuadratureSpec& spec);

// Single fixed pass (no refinement) used where the caller controls panels.
double integrate_fixed(const std::function<double(double)>& f,
                       const std::vector<double>& edges, int gl_order);

}  // namespace zexp
