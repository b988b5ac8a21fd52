#pragma once
// Truncated explicit-formula evaluators: the zeta log-derivative
// approximation with computable tail bounds, two Guinand-type prime sums,
// the zero-side expansion of the area remainder, and a weighted-window
// transform check with its closed residue form.

#include <complex>
#include <vector>

#include "zexp/mangoldt.hpp"
#include "zexp/quadrature.hpp"
#include "zexp/zero_catalog.hpp"

namespace zexp {

using Complex = std::complex<double>;

// Shared truncation parameters: prime sums run to X, the zero sum to
// ordinates <= T_max, the trivial-zero sum to n_trivial terms.
struct TruncationPolicy {
    double X = 1e4;
    double T_max = 100.0;
    int n_trivial = 50;
};

struct LemmaValue {
    Complex value{0.0, 0.0};
    double zero_tail = 0.0;       // omitted zeros with ordinate > T_max
    double trivial_tail = 0.0;    // omitted trivial-zero terms
    double remainder_bound = 0.0; // structural remainder of the truncation
    double tail_sum() const { return zero_tail + trivial_tail + remainder_bound; }
};

// Truncated right-hand side approximating zeta'/zeta(s). Throws pole_error
// when s is within 1e-6 of s = 1, a trivial zero, or a catalog zero, and
// coverage_error when the table or catalog cannot honor the policy.
LemmaValue lemma_rhs(Complex s, const TruncationPolicy& policy,
                     const MangoldtTable& table, const ZeroCatalog& catalog,
                     int threads = 0);

// Prime-sum weight: with_log divides each term by log n, without_log does
// not. Only the with_log variant reproduces pi*S(T); the other is kept for
// side-by-side comparison.
enum class GuinandVariant { with_log, without_log };

double guinand_truncated(double T, double X, GuinandVariant variant,
                         const MangoldtTable& table,
                         const QuadratureSpec& spec = {}, int threads = 0);

struct ZeroSumValue {
    double value = 0.0;
    double zero_tail = 0.0;
};

// Zero-side expansion of psi_tilde(x) - x^2/2 truncated at ordinate T_max.
// The expansion omits the constant residue at s = -1, so it differs from
// the arithmetic value by a fixed offset near 1.985; offset_fit measures it.
ZeroSumValue delta_tilde_from_zeros(double x, double T_max,
                                    const ZeroCatalog& catalog,
                                    int n_trivial = 50);

struct OffsetFit {
    double c = 0.0;      // fitted constant offset (arithmetic minus zero side)
    double spread = 0.0; // max minus min of the per-point differences
};

// Fits the constant offset over at least 20 sample points, each inside
// [2, n_max/2]. Throws fit_rejected_error when the spread exceeds one tenth
// of the median x^{3/2} scale.
OffsetFit offset_fit(const std::vector<double>& xs, double T_max,
                     const MangoldtTable& table, const ZeroCatalog& catalog,
                     int n_trivial = 50);

// Imaginary part of the contour edge term: the vertical-segment integral
// minus pi. Equals inner_log_integral(T, X) + arctan(2T) - pi up to
// quadrature error; T = 0 gives exactly -pi.
double im_contour_term(double T, double X, const QuadratureSpec& spec = {});

struct InverseTransformCheck {
    double lhs = 0.0;         // weighted-window integral over [0, T_cut]
    double rhs = 0.0;         // closed residue evaluation of the same window
    double rhs_printed = 0.0; // unweighted Dirichlet form kept for reporting
    double tail_bound = 0.0;  // envelope bound on the omitted t > T_cut part
};

// Integrates the window W(t) = 4(s-1)t / ((s-1/2)^2 + t^2)^2 against the
// truncated zero-counting integrand and compares with the residue value.
// Requires real s > 1 and X >= 2 within table coverage.
InverseTransformCheck inverse_transform_check(double s, double X,
                                              const MangoldtTable& table,
                                              double T_cut = 1000.0,
                                              const QuadratureSpec& spec = {});

// Single-term window integral int_0^{T_cut} W(t) sin(t log n)/sqrt(n) dt and
// its closed value pi (s-1) log(n) n^{-s} / (s - 1/2).
double residue_component_integral(double s, double n, double T_cut = 2000.0,
                                  const QuadratureSpec& spec = {});
double residue_component_closed(double s, double n);

}  // namespace zexp
