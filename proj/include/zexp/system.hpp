#pragma once
// Integral-equation layer connecting the area remainder of the Chebyshev
// counts with the zero-counting fluctuation: second-derivative and
// index-derivative kernels, boundary terms on (1, 2), the inverse and
// forward maps between the two sides, a truncated-window kernel with its
// arithmetic companion, and a smoothed transform with shift parameter.

#include <complex>
#include <vector>

#include "zexp/mangoldt.hpp"
#include "zexp/quadrature.hpp"
#include "zexp/report.hpp"
#include "zexp/zero_catalog.hpp"

namespace zexp {

using Complex = std::complex<double>;

// Second y-derivative of H(y) = sin(t log y) / (sqrt(y) log y), written out
// in six terms. Odd in t, zero at t = 0; requires y > 1.
double kernel_F(double t, double y);

// (3/4 - t^2)^2 + 4 t^2, the squared modulus of rho (rho + 1) on the line
// rho = 1/2 + i t.
double kernel_denom(double t);

// Phi(x, t) = ((3/4 - t^2) cos(t log x) + 2 t sin(t log x)) / kernel_denom(t)
// and its t-derivative. kernel_K is the polynomial-weighted numerator with
// kernel_K(x, t) = kernel_denom(t)^2 * d Phi / d t; requires x >= 1.
double kernel_phi(double x, double t);
double kernel_phi_dt(double x, double t);
double kernel_K(double x, double t);

// Boundary term of the inverse map at the left truncation point a in (1, 2),
// where psi and psi_tilde both vanish. boundary_g follows the stated form
// whose derivative bracket drops one log factor; it evaluates to +1 at t = 0.
// boundary_g_corrected carries the true derivative of H and the sign that
// makes the t = 0 value -1, matching the counting fluctuation at 0+; the
// inverse map uses the corrected form.
double boundary_g(double a, double t, const QuadratureSpec& spec = {});
double boundary_g_corrected(double a, double t, const QuadratureSpec& spec = {});

struct KernelEval {
    double value = 0.0;
    double tail_estimate = 0.0;  // computable bound for the truncated part
};

// S(t) recovered from the arithmetic side: -(1/pi) int_a^{y_max} of
// kernel_F(t, y) times the area remainder, plus the corrected boundary term.
// Requires t >= 0, a in (1, 2), y_max within table coverage. Throws
// truncation_error when the tail estimate exceeds spec.tail_tol.
KernelEval inverse_map(double t, double a, double y_max,
                       const MangoldtTable& table,
                       const QuadratureSpec& spec = {}, int threads = 0);

// Area remainder recovered from the zero side: Stieltjes integration of
// Phi(x, t) against the counting measure split into its smooth and
// fluctuating parts, truncated at ordinate t_max, plus the closed residue
// terms that do not come from zeros. Requires x >= 1.
KernelEval forward_map(double x, double t_max, const ZeroCatalog& catalog,
                       const QuadratureSpec& spec = {}, int n_trivial = 50);

// Residual table: inverse_map against catalog S(t) on t_grid, forward_map
// against the zero-side area remainder on x_grid. Empty grids give an empty
// table.
std::vector<ReportRow> residual_system(const std::vector<double>& t_grid,
                                       const std::vector<double>& x_grid,
                                       double a, double y_max,
                                       const MangoldtTable& table,
                                       const ZeroCatalog& catalog,
                                       const QuadratureSpec& spec = {},
                                       int threads = 0);

// Finite-window pair kernel: the t' zero contributes through sharp cutoff
// at height X > 1; degenerate differences fall back to the sinc limit.
double kernel_KX(double t, double tp, double X);

// Arithmetic companion of kernel_KX built from the exact segment integral
// of the area remainder plus the archimedean terms.
double kernel_HX(double t, double X, const MangoldtTable& table,
                 int threads = 0);

// Sum of kernel_KX(t, t_i, X) over every catalog ordinate minus
// kernel_HX(t, X). The X dependence of this residual stays within a fixed
// band when the catalog covers the window.
double kx_residual(double t, double X, const ZeroCatalog& catalog,
                   const MangoldtTable& table, int threads = 0);

struct SmoothedTransformJ {
    double lhs = 0.0;         // window side at shifted abscissa
    double rhs = 0.0;         // Dirichlet side with shift corrections
    double rhs_printed = 0.0; // uncorrected stated form, kept for reporting
};

// Smoothed transform at s = 1/2 + i k with real shift eps. Requires
// eps > 1/2 so the shifted abscissa lies in the Dirichlet half-plane.
SmoothedTransformJ smoothed_transform_J(double k, double eps,
                                        const MangoldtTable& table,
                                        int threads = 0);

}  // namespace zexp
