#include "zexp/system.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "zexp/errors.hpp"
#include "zexp/explicit.hpp"
#include "zexp/gamma.hpp"
#include "zexp/numeric.hpp"
#include "zexp/segments.hpp"
#include "zexp/zeta.hpp"

namespace zexp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.1447298858494001741;

// H(y) = sin(t log y) / (sqrt(y) log y); the removable point y -> 1 uses the
// sinc series so boundary integrals can start at 1 exactly.
double eval_H(double t, double y) {
    double L = std::log(y);
    double z = t * L;
    if (std::abs(z) < 1e-4) {
        double z2 = z * z;
        return t * (1.0 - z2 / 6.0 + z2 * z2 / 120.0) / std::sqrt(y);
    }
    return std::sin(z) / (std::sqrt(y) * L);
}

// True derivative of H in y.
double eval_H_prime(double t, double y) {
    double L = std::log(y);
    return (t * std::cos(t * L) / L -
            std::sin(t * L) * (0.5 / L + 1.0 / (L * L))) /
           (y * std::sqrt(y));
}

void check_left_point(double a, const char* who) {
    if (!(a > 1.0 && a < 2.0))
        throw domain_error(std::string(who) +
                           ": truncation point a must lie in (1, 2)");
}
}  // namespace

double kernel_F(double t, double y) {
    if (!(y > 1.0)) throw domain_error("kernel_F: y must exceed 1");
    double L = std::log(y);
    double s = std::sin(t * L), c = std::cos(t * L);
    double L2 = L * L, L3 = L2 * L;
    return ((0.75 - t * t) * s / L - 2.0 * t * c / L - 2.0 * t * c / L2 +
            2.0 * s / L2 + 2.0 * s / L3) /
           (y * y * std::sqrt(y));
}

double kernel_denom(double t) {
    double A = 0.75 - t * t;
    return A * A + 4.0 * t * t;
}

double kernel_phi(double x, double t) {
    if (!(x >= 1.0)) throw domain_error("kernel_phi: x must be >= 1");
    double L = std::log(x);
    return ((0.75 - t * t) * std::cos(t * L) + 2.0 * t * std::sin(t * L)) /
           kernel_denom(t);
}

double kernel_K(double x, double t) {
    if (!(x >= 1.0)) throw domain_error("kernel_K: x must be >= 1");
    double L = std::log(x);
    double A = 0.75 - t * t;
    double D = A * A + 4.0 * t * t;
    double Dt = 4.0 * t * t * t + 5.0 * t;
    double cos_group = 2.0 * t * (L - 1.0) * D - A * Dt;
    double sin_group = (2.0 - A * L) * D - 2.0 * t * Dt;
    return std::cos(t * L) * cos_group + std::sin(t * L) * sin_group;
}

double kernel_phi_dt(double x, double t) {
    double D = kernel_denom(t);
    return kernel_K(x, t) / (D * D);
}

double boundary_g(double a, double t, const QuadratureSpec& spec) {
    check_left_point(a, "boundary_g");
    double integral = integrate([&](double y) { return eval_H(t, y); }, 1.0, a,
                                std::max(std::abs(t), 1.0), spec);
    double La = std::log(a);
    // Bracket as stated: one log factor short on the cosine term.
    double B = (t * std::cos(t * La) - std::sin(t * La) * (0.5 * La + 1.0)) /
               (a * std::sqrt(a) * La * La);
    // On (1, 2) the prime counts vanish: delta = -a, area remainder = -a^2/2.
    return -(1.0 / kPi) * (-integral + a * eval_H(t, a) -
                           0.5 * a * a * B + std::atan(2.0 * t) - kPi);
}

double boundary_g_corrected(double a, double t, const QuadratureSpec& spec) {
    check_left_point(a, "boundary_g_corrected");
    double integral = integrate([&](double y) { return eval_H(t, y); }, 1.0, a,
                                std::max(std::abs(t), 1.0), spec);
    return (1.0 / kPi) * (integral - a * eval_H(t, a) +
                          0.5 * a * a * eval_H_prime(t, a) +
                          std::atan(2.0 * t) - kPi);
}

KernelEval inverse_map(double t, double a, double y_max,
                       const MangoldtTable& table, const QuadratureSpec& spec,
                       int threads) {
    if (!(t >= 0.0)) throw domain_error("inverse_map: t must be >= 0");
    check_left_point(a, "inverse_map");
    if (!(y_max >= 2.0)) throw domain_error("inverse_map: y_max must be >= 2");
    if (y_max > static_cast<double>(table.n_max) * (1.0 + 1e-15))
        throw coverage_error("inverse_map: y_max exceeds table coverage n_max = " +
                             std::to_string(table.n_max));

    ChebyshevSample end = table.sample(y_max);
    KernelEval out;
    // Truncation estimate from one integration by parts at y_max plus the
    // envelope of the remaining kernel mass.
    out.tail_estimate = std::abs(eval_H_prime(t, y_max) * end.delta_tilde) +
                        std::abs(eval_H(t, y_max) * end.delta) +
                        (2.0 + t) / (std::sqrt(y_max) * std::log(y_max));
    if (out.tail_estimate > spec.tail_tol)
        throw truncation_error("inverse_map: tail estimate " +
                               repr_double(out.tail_estimate) +
                               " exceeds tail_tol " + repr_double(spec.tail_tol) +
                               "; raise y_max or tail_tol");

    double integral = integrate_integer_segments(
        [&](double y) { return kernel_F(t, y) * table.sample(y).delta_tilde; },
        a, y_max, 7, threads);
    out.value = -(integral / kPi) + boundary_g_corrected(a, t, spec);
    return out;
}

KernelEval forward_map(double x, double t_max, const ZeroCatalog& catalog,
                       const QuadratureSpec& spec, int n_trivial) {
    if (!(x >= 1.0)) throw domain_error("forward_map: x must be >= 1");
    if (!(t_max > 2.0 * kPi))
        throw domain_error("forward_map: t_max must exceed 2 pi");
    if (t_max > catalog.t_max * (1.0 + 1e-12))
        throw coverage_error("forward_map: catalog ends at t = " +
                             repr_double(catalog.t_max) + " but t_max = " +
                             repr_double(t_max));

    std::vector<double> edges;
    edges.push_back(0.0);
    for (double t : catalog.ordinates) {
        if (t > t_max) break;
        edges.push_back(t);
    }
    if (edges.back() < t_max) edges.push_back(t_max);
    double freq = std::max(std::log(x), 1.0);

    // Stieltjes split: the jump part integrates by parts against Phi', the
    // smooth part against the density of the mean count.
    double jump_part = integrate_edges(
        [&](double t) { return kernel_phi_dt(x, t) * catalog.S_of_T(t); },
        edges, freq, spec);
    double smooth_part = integrate_edges(
        [&](double t) { return kernel_phi(x, t) * smooth_count_g_prime(t); },
        edges, freq, spec);

    const double x32 = x * std::sqrt(x);
    KahanSum triv;
    for (int n = 1; n <= n_trivial; ++n)
        triv.add(std::pow(x, 1.0 - 2.0 * n) / (2.0 * n * (2.0 * n - 1.0)));
    // Boundary value of the parts integration at t = 0: Phi(x, 0) = 4/3 and
    // the fluctuation starts at -1.
    double f_ext = -x * 1.8378770664093454836 - triv.value() +
                   (8.0 / 3.0) * (-1.0) * x32;

    KernelEval out;
    out.value = 2.0 * x32 * (jump_part - smooth_part) + f_ext;
    out.tail_estimate = 4.0 * x32 * (std::log(t_max / (2.0 * kPi)) + 1.0) /
                        (kPi * t_max);
    return out;
}

std::vector<ReportRow> residual_system(const std::vector<double>& t_grid,
                                       const std::vector<double>& x_grid,
                                       double a, double y_max,
                                       const MangoldtTable& table,
                                       const ZeroCatalog& catalog,
                                       const QuadratureSpec& spec,
                                       int threads) {
    std::vector<ReportRow> rows;
    rows.reserve(t_grid.size() + x_grid.size());
    using clock = std::chrono::steady_clock;
    for (double t : t_grid) {
        auto t0 = clock::now();
        KernelEval ev = inverse_map(t, a, y_max, table, spec, threads);
        double rhs = catalog.S_of_T(t);
        ReportRow row;
        row.identity = "inverse_map";
        row.param1 = t;
        row.param2 = a;
        row.lhs = ev.value;
        row.rhs = rhs;
        row.residual = ev.value - rhs;
        row.tolerance = spec.tail_tol;
        row.tail = ev.tail_estimate;
        row.pass = std::abs(row.residual) <= row.tolerance;
        row.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0)
                          .count();
        rows.push_back(row);
    }
    for (double x : x_grid) {
        auto t0 = clock::now();
        KernelEval ev = forward_map(x, catalog.t_max, catalog, spec);
        ZeroSumValue zs = delta_tilde_from_zeros(x, catalog.t_max, catalog);
        ReportRow row;
        row.identity = "forward_map";
        row.param1 = x;
        row.param2 = catalog.t_max;
        row.lhs = ev.value;
        row.rhs = zs.value;
        row.residual = ev.value - zs.value;
        row.tolerance = ev.tail_estimate + zs.zero_tail;
        row.tail = ev.tail_estimate;
        row.pass = std::abs(row.residual) <= row.tolerance;
        row.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0)
                          .count();
        rows.push_back(row);
    }
    return rows;
}

double kernel_KX(double t, double tp, double X) {
    if (!(X > 1.0)) throw domain_error("kernel_KX: X must exceed 1");
    const double lnX = std::log(X);
    auto sinc_ln = [lnX](double z) {
        return std::abs(z) < 1e-8 ? lnX : std::sin(z * lnX) / z;
    };
    double A = 0.75 - t * t;
    double Ap = 0.75 - tp * tp;
    double Dp = Ap * Ap + 4.0 * tp * tp;
    double zm = tp - t, zp = tp + t;
    return (-(A * Ap + 4.0 * t * tp) * sinc_ln(zm) -
            (A * Ap - 4.0 * t * tp) * sinc_ln(zp) +
            (1.5 + 2.0 * t * tp) * std::cos(zm * lnX) +
            (1.5 - 2.0 * t * tp) * std::cos(zp * lnX)) /
           Dp;
}

double kernel_HX(double t, double X, const MangoldtTable& table, int threads) {
    Complex s(0.5, t);
    Complex I = delta_tilde_power_integral(1.0, X, s, table, threads);
    return (s * (s + 1.0) * I).real() + 0.5 * kLogPi -
           0.5 * digamma_re_half_line(t);
}

double kx_residual(double t, double X, const ZeroCatalog& catalog,
                   const MangoldtTable& table, int threads) {
    KahanSum acc;
    for (double tp : catalog.ordinates) acc.add(kernel_KX(t, tp, X));
    return acc.value() - kernel_HX(t, X, table, threads);
}

SmoothedTransformJ smoothed_transform_J(double k, double eps,
                                        const MangoldtTable& table,
                                        int threads) {
    if (!(eps > 0.5))
        throw domain_error(
            "smoothed_transform_J: eps must exceed 1/2 so the shifted "
            "abscissa has real part above 1, inside the Dirichlet half-plane");
    const Complex s(0.5, k);
    const Complex shifted(0.5 + eps, k);
    const double N = static_cast<double>(table.n_max);
    Complex I_tilde = delta_tilde_power_integral(1.0, N, shifted, table, threads);
    Complex I_lin = delta_power_integral(1.0, N, shifted, table, threads);

    SmoothedTransformJ out;
    out.lhs = (s * (s + 1.0) * I_tilde).real();
    DirichletValue dir = zeta_logderiv_dirichlet(shifted, table.n_max, table,
                                                 threads);
    // Principal continuation of the truncated Dirichlet sum: the average of
    // the prime counts contributes (N + 1/2)^{1 - s'} / (s' - 1).
    Complex principal = std::exp((1.0 - shifted) * std::log(N + 0.5)) /
                        (shifted - 1.0);
    double re_neg_logderiv = (-dir.value + principal).real();
    out.rhs = re_neg_logderiv - (1.0 / (shifted - 1.0)).real() - 1.25 +
              (-eps * s * I_tilde - eps * I_lin).real();
    out.rhs_printed = dir.value.real() +
                      (-eps * s * I_tilde + eps * I_lin).real();
    return out;
}

}  // namespace zexp
