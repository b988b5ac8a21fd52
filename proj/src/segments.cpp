#include "zexp/segments.hpp"

#include <algorithm>
#include <cmath>

#include "zexp/errors.hpp"
#include "zexp/gauss.hpp"
#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"

namespace zexp {

namespace {
// Each segment [alpha, beta) within [m, m+1) integrates exactly via
// int x^{-q} dx = (beta^{1-q} - alpha^{1-q})/(1-q); the three powers needed
// all derive from one complex exp E = x^{-w} per node.

void check_range(double a, double b, const MangoldtTable& table, const char* who) {
    if (!(a >= 1.0))
        throw domain_error(std::string(who) + ": lower limit must be >= 1");
    if (b > static_cast<double>(table.n_max) * (1.0 + 1e-15))
        throw coverage_error(std::string(who) + ": upper limit " + repr_double(b) +
                             " exceeds table coverage n_max = " + std::to_string(table.n_max));
}
}  // namespace

Complex delta_tilde_power_integral(double a, double b, Complex w,
                                   const MangoldtTable& table, int threads) {
    check_range(a, b, table, "delta_tilde_power_integral");
    if (!(b > a)) return {0.0, 0.0};
    std::int64_t m0 = static_cast<std::int64_t>(a);
    std::int64_t m1 = static_cast<std::int64_t>(b);
    if (static_cast<double>(m1) == b) --m1;  // [m1, b) empty when b integral
    std::int64_t count = m1 - m0 + 1;
    if (count <= 0) return {0.0, 0.0};

    const Complex wp1 = w + 1.0;
    const Complex w1m = 1.0 - w;
    std::int64_t n_chunks = (count + (1 << 15) - 1) / (1 << 15);
    std::vector<Complex> partial(n_chunks, Complex(0, 0));
    parallel_for(n_chunks, [&](std::int64_t c) {
        std::int64_t mb = m0 + c * (1ll << 15);
        std::int64_t me = std::min<std::int64_t>(m1, mb + (1ll << 15) - 1);
        KahanSum re, im;
        double x_lo = std::max(a, static_cast<double>(mb));
        Complex E_lo = std::exp(-w * std::log(x_lo));
        for (std::int64_t m = mb; m <= me; ++m) {
            double x_hi = std::min(b, static_cast<double>(m + 1));
            Complex E_hi = std::exp(-w * std::log(x_hi));
            double P1 = table.prefix1[static_cast<std::size_t>(m)];
            double P2 = table.prefix2[static_cast<std::size_t>(m)];
            // P1 int x^{-w-1} - P2 int x^{-w-2} - (1/2) int x^{-w}
            Complex term = -P1 * (E_hi - E_lo) / w +
                           P2 * (E_hi / x_hi - E_lo / x_lo) / wp1 -
                           0.5 * (E_hi * x_hi - E_lo * x_lo) / w1m;
            re.add(term.real());
            im.add(term.imag());
            x_lo = x_hi;
            E_lo = E_hi;
        }
        partial[c] = Complex(re.value(), im.value());
    }, threads);
    KahanSum re, im;
    for (const Complex& p : partial) {
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

Complex delta_power_integral(double a, double b, Complex w,
                             const MangoldtTable& table, int threads) {
    check_range(a, b, table, "delta_power_integral");
    if (!(b > a)) return {0.0, 0.0};
    std::int64_t m0 = static_cast<std::int64_t>(a);
    std::int64_t m1 = static_cast<std::int64_t>(b);
    if (static_cast<double>(m1) == b) --m1;
    std::int64_t count = m1 - m0 + 1;
    if (count <= 0) return {0.0, 0.0};

    const Complex w1m = 1.0 - w;
    std::int64_t n_chunks = (count + (1 << 15) - 1) / (1 << 15);
    std::vector<Complex> partial(n_chunks, Complex(0, 0));
    parallel_for(n_chunks, [&](std::int64_t c) {
        std::int64_t mb = m0 + c * (1ll << 15);
        std::int64_t me = std::min<std::int64_t>(m1, mb + (1ll << 15) - 1);
        KahanSum re, im;
        double x_lo = std::max(a, static_cast<double>(mb));
        Complex E_lo = std::exp(-w * std::log(x_lo));
        for (std::int64_t m = mb; m <= me; ++m) {
            double x_hi = std::min(b, static_cast<double>(m + 1));
            Complex E_hi = std::exp(-w * std::log(x_hi));
            double P1 = table.prefix1[static_cast<std::size_t>(m)];
            // P1 int x^{-w-1} - int x^{-w}
            Complex term = -P1 * (E_hi - E_lo) / w -
                           (E_hi * x_hi - E_lo * x_lo) / w1m;
            re.add(term.real());
            im.add(term.imag());
            x_lo = x_hi;
            E_lo = E_hi;
        }
        partial[c] = Complex(re.value(), im.value());
    }, threads);
    KahanSum re, im;
    for (const Complex& p : partial) {
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

namespace {
// One segment's exact contribution to int g(u) sin(tau u + theta) du over
// [u1, u2] inside [ln m, ln(m+1)), using
// int e^{au} sin(bu + c) du = e^{au} (a sin - b cos)/(a^2 + b^2).
struct TrigNode {
    double s, c;    // sin/cos of tau*u + theta
    double e_half;  // e^{u/2} = sqrt(x)
};

double resonance_segment(double P1, double P2, double tau,
                         const TrigNode& lo, const TrigNode& hi) {
    auto anti = [tau](double alpha, const TrigNode& n, double e_alpha_u) {
        return e_alpha_u * (alpha * n.s - tau * n.c) / (alpha * alpha + tau * tau);
    };
    double lo_m12 = 1.0 / lo.e_half, hi_m12 = 1.0 / hi.e_half;
    double lo_m32 = lo_m12 / (lo.e_half * lo.e_half), hi_m32 = hi_m12 / (hi.e_half * hi.e_half);
    double v = P1 * (anti(-0.5, hi, hi_m12) - anti(-0.5, lo, lo_m12));
    v -= P2 * (anti(-1.5, hi, hi_m32) - anti(-1.5, lo, lo_m32));
    v -= 0.5 * (anti(0.5, hi, hi.e_half) - anti(0.5, lo, lo.e_half));
    return v;
}

TrigNode trig_node(double x, double tau, double theta) {
    double u = std::log(x);
    TrigNode n;
    n.s = std::sin(tau * u + theta);
    n.c = std::cos(tau * u + theta);
    n.e_half = std::sqrt(x);
    return n;
}
}  // namespace

double resonance_integral_exact(double U, double tau, double theta,
                                const MangoldtTable& table) {
    std::vector<double> grid{U};
    return resonance_cumulative(grid, tau, theta, table)[0];
}

std::vector<double> resonance_cumulative(const std::vector<double>& u_grid,
                                         double tau, double theta,
                                         const MangoldtTable& table) {
    std::vector<double> out(u_grid.size(), 0.0);
    if (u_grid.empty()) return out;
    double U_last = u_grid.back();
    if (U_last < 0.0) throw domain_error("resonance integral: U must be >= 0");
    double X = std::exp(U_last);
    if (X > static_cast<double>(table.n_max) * (1.0 + 1e-12))
        throw coverage_error("resonance integral: e^U = " + repr_double(X) +
                             " exceeds table coverage n_max = " +
                             std::to_string(table.n_max));
    KahanSum acc;
    std::size_t gi = 0;
    while (gi < u_grid.size() && u_grid[gi] <= 0.0) out[gi++] = 0.0;
    std::int64_t m_end = static_cast<std::int64_t>(std::ceil(X));
    TrigNode lo = trig_node(1.0, tau, theta);
    for (std::int64_t m = 1; m < m_end && gi < u_grid.size(); ++m) {
        double x_hi = static_cast<double>(m + 1);
        double u_hi = std::log(x_hi);
        double P1 = table.prefix1[static_cast<std::size_t>(m)];
        double P2 = table.prefix2[static_cast<std::size_t>(m)];
        // Emit grid values that land inside this segment.
        while (gi < u_grid.size() && u_grid[gi] <= u_hi) {
            TrigNode mid = trig_node(std::exp(u_grid[gi]), tau, theta);
            out[gi] = acc.value() + resonance_segment(P1, P2, tau, lo, mid);
            ++gi;
        }
        TrigNode hi = trig_node(x_hi, tau, theta);
        acc.add(resonance_segment(P1, P2, tau, lo, hi));
        lo = hi;
    }
    return out;
}

double g_of_u(double u, const MangoldtTable& table) {
    double x = std::exp(u);
    if (x > static_cast<double>(table.n_max) * (1.0 + 1e-12))
        throw coverage_error("g_of_u: e^u exceeds table coverage");
    if (x < 1.0) throw domain_error("g_of_u: u must be >= 0");
    std::uint64_t m = std::min<std::uint64_t>(static_cast<std::uint64_t>(x), table.n_max);
    double r = std::sqrt(x);
    return table.prefix1[m] / r - table.prefix2[m] / (x * r) - 0.5 * r;
}

double sup_g_exact(double u_max, const MangoldtTable& table) {
    if (!(u_max > 0.0)) throw domain_error("sup_g_exact: u_max must be positive");
    double X = std::exp(u_max);
    if (X > static_cast<double>(table.n_max) * (1.0 + 1e-12))
        throw coverage_error("sup_g_exact: e^{u_max} exceeds table coverage");
    auto g_at = [&](double x, double P1, double P2) {
        double r = std::sqrt(x);
        return P1 / r - P2 / (x * r) - 0.5 * r;
    };
    double best = 0.0;
    std::int64_t m_end = static_cast<std::int64_t>(std::ceil(X));
    for (std::int64_t m = 1; m < m_end; ++m) {
        double beta = std::min(X, static_cast<double>(m + 1));
        double P1 = table.prefix1[static_cast<std::size_t>(m)];
        double P2 = table.prefix2[static_cast<std::size_t>(m)];
        best = std::max(best, std::abs(g_at(static_cast<double>(m), P1, P2)));
        best = std::max(best, std::abs(g_at(beta, P1, P2)));
        // d/dy of (P1 y - P2 - y^2/2) y^{-3/2} vanishes at the positive root
        // of y^2 + 2 P1 y - 6 P2 = 0.
        double disc = P1 * P1 + 6.0 * P2;
        if (disc > 0.0) {
            double y_star = -P1 + std::sqrt(disc);
            if (y_star > static_cast<double>(m) && y_star < beta)
                best = std::max(best, std::abs(g_at(y_star, P1, P2)));
        }
    }
    return best;
}

double integrate_integer_segments(const std::function<double(double)>& f,
                                  double a, double b, int gl_order, int threads) {
    if (!(b > a)) return 0.0;
    const GaussRule& rule = gauss_legendre(gl_order);
    std::int64_t m0 = static_cast<std::int64_t>(std::floor(a));
    std::int64_t m1 = static_cast<std::int64_t>(std::ceil(b)) - 1;
    std::int64_t count = m1 - m0 + 1;
    return parallel_chunk_sum(count, 1 << 12, [&](std::int64_t cb, std::int64_t ce) {
        KahanSum s;
        for (std::int64_t i = cb; i < ce; ++i) {
            std::int64_t m = m0 + i;
            double lo = std::max(a, static_cast<double>(m));
            double hi = std::min(b, static_cast<double>(m + 1));
            if (hi <= lo) continue;
            double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            KahanSum p;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k)
                p.add(rule.weights[k] * f(mid + half * rule.nodes[k]));
            s.add(half * p.value());
        }
        return s.value();
    }, threads);
}

}  // namespace zexp
