#include "zexp/explicit.hpp"

#include <algorithm>
#include <cmath>

#include "zexp/errors.hpp"
#include "zexp/exp_integral.hpp"
#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"
#include "zexp/zeta.hpp"

namespace zexp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;
// zeta'(-1)/zeta(-1), the constant residue the zero-side expansion omits.
constexpr double kC0 = 1.9850537244054112;

std::uint64_t checked_limit(double X, const MangoldtTable& table, bool strict,
                            const char* who) {
    if (!(X >= 2.0)) throw domain_error(std::string(who) + ": X must be >= 2");
    double lim = strict ? std::ceil(X) - 1.0 : std::floor(X);
    if (lim > static_cast<double>(table.n_max))
        throw coverage_error(std::string(who) + ": X = " + repr_double(X) +
                             " exceeds table coverage n_max = " +
                             std::to_string(table.n_max));
    return static_cast<std::uint64_t>(lim);
}

// Deterministic chunked complex sum over n in [2, n_limit] of term(n, L(n))
// restricted to n with nonzero von Mangoldt weight.
Complex mangoldt_complex_sum(const MangoldtTable& table, std::uint64_t n_limit,
                             const std::function<Complex(std::uint64_t, double)>& term,
                             int threads) {
    if (n_limit < 2) return {0.0, 0.0};
    constexpr std::int64_t kChunk = 1 << 16;
    std::int64_t count = static_cast<std::int64_t>(n_limit) - 1;
    std::int64_t n_chunks = (count + kChunk - 1) / kChunk;
    std::vector<Complex> partial(n_chunks, Complex(0.0, 0.0));
    parallel_for(n_chunks, [&](std::int64_t c) {
        std::int64_t nb = 2 + c * kChunk;
        std::int64_t ne = std::min<std::int64_t>(static_cast<std::int64_t>(n_limit),
                                                 nb + kChunk - 1);
        KahanSum re, im;
        for (std::int64_t n = nb; n <= ne; ++n) {
            double L = table.values[static_cast<std::size_t>(n)];
            if (L == 0.0) continue;
            Complex t = term(static_cast<std::uint64_t>(n), L);
            re.add(t.real());
            im.add(t.imag());
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
}  // namespace

LemmaValue lemma_rhs(Complex s, const TruncationPolicy& policy,
                     const MangoldtTable& table, const ZeroCatalog& catalog,
                     int threads) {
    const double X = policy.X;
    const double T_max = policy.T_max;
    const double sigma = s.real();
    std::uint64_t n_limit = checked_limit(X, table, false, "lemma_rhs");
    if (!(T_max > 2.0 * kPi))
        throw domain_error("lemma_rhs: T_max must exceed 2 pi for the zero tail bound");
    if (T_max > catalog.t_max * (1.0 + 1e-12))
        throw coverage_error("lemma_rhs: catalog ends at t = " +
                             repr_double(catalog.t_max) + " but T_max = " +
                             repr_double(T_max));
    if (policy.n_trivial < 0)
        throw domain_error("lemma_rhs: n_trivial must be nonnegative");
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-6)
        throw pole_error("lemma_rhs: s within 1e-6 of the pole at s = 1");
    for (int n = 1; n <= policy.n_trivial; ++n)
        if (std::abs(s + Complex(2.0 * n, 0.0)) < 1e-6)
            throw pole_error("lemma_rhs: s within 1e-6 of the trivial zero at s = " +
                             std::to_string(-2 * n));
    for (double t : catalog.ordinates) {
        if (t > T_max) break;
        if (std::abs(s - Complex(0.5, t)) < 1e-6 ||
            std::abs(s - Complex(0.5, -t)) < 1e-6)
            throw pole_error("lemma_rhs: s within 1e-6 of the zero at ordinate " +
                             repr_double(t));
    }

    LemmaValue out;
    out.value = -mangoldt_complex_sum(
        table, n_limit,
        [&](std::uint64_t n, double L) {
            return L * std::exp(-s * std::log(static_cast<double>(n)));
        },
        threads);

    const double lnX = std::log(X);
    const Complex Xms = std::exp(-s * lnX);
    const Complex ssp1 = s * (s + 1.0);
    out.value += table.psi(X) * Xms;
    out.value += s * table.psi_tilde(X) * Xms / X;
    out.value -= ssp1 * (Xms * X) / (2.0 * (s - 1.0));

    KahanSum zre, zim;
    for (double t : catalog.ordinates) {
        if (t > T_max) break;
        for (double sign : {1.0, -1.0}) {
            Complex rho(0.5, sign * t);
            Complex term = std::exp((rho - s) * lnX) / (rho * (rho + 1.0) * (s - rho));
            zre.add(term.real());
            zim.add(term.imag());
        }
    }
    out.value += ssp1 * Complex(zre.value(), zim.value());

    KahanSum tre, tim;
    for (int n = 1; n <= policy.n_trivial; ++n) {
        double two_n = 2.0 * n;
        Complex term = std::exp(-(s + two_n) * lnX) /
                       (two_n * (two_n - 1.0) * (s + two_n));
        tre.add(term.real());
        tim.add(term.imag());
    }
    out.value += ssp1 * Complex(tre.value(), tim.value());

    out.zero_tail = 3.0 * std::abs(ssp1) * std::pow(X, 0.5 - sigma) *
                    (std::log(T_max / (2.0 * kPi)) + 1.0) / (kPi * T_max * T_max);
    double n_next = 2.0 * (policy.n_trivial + 1);
    out.trivial_tail = 2.0 * std::abs(ssp1) * std::pow(X, -n_next - sigma) /
                       (n_next * (n_next - 1.0) * std::abs(s + n_next));
    out.remainder_bound = 1.5 * (std::abs(s + 1.0) * kLog2Pi * std::pow(X, -sigma) +
                                 std::abs(s) * kC0 * std::pow(X, -sigma - 1.0));
    return out;
}

double guinand_truncated(double T, double X, GuinandVariant variant,
                         const MangoldtTable& table, const QuadratureSpec& spec,
                         int threads) {
    if (T < 0.0) throw domain_error("guinand_truncated: T must be >= 0");
    std::uint64_t n_limit = checked_limit(X, table, false, "guinand_truncated");
    const bool with_log = variant == GuinandVariant::with_log;
    double sum = parallel_chunk_sum(
        static_cast<std::int64_t>(n_limit) - 1, 1 << 16,
        [&](std::int64_t b, std::int64_t e) {
            KahanSum acc;
            for (std::int64_t i = b; i < e; ++i) {
                std::int64_t n = i + 2;
                double L = table.values[static_cast<std::size_t>(n)];
                if (L == 0.0) continue;
                double u = std::log(static_cast<double>(n));
                double w = std::sin(T * u) / std::sqrt(static_cast<double>(n));
                if (with_log) w /= u;
                acc.add(L * w);
            }
            return acc.value();
        },
        threads);
    const double lnX = std::log(X);
    const double delta_term = (table.psi(X) - X) * std::sin(T * lnX) /
                              (std::sqrt(X) * lnX);
    if (with_log)
        return -sum + inner_log_integral_exact(T, X) + delta_term +
               std::atan(2.0 * T) - kPi;
    return -sum + delta_term + im_contour_term(T, X, spec);
}

ZeroSumValue delta_tilde_from_zeros(double x, double T_max,
                                    const ZeroCatalog& catalog, int n_trivial) {
    if (!(x >= 1.0))
        throw domain_error("delta_tilde_from_zeros: x must be >= 1");
    if (!(T_max > 2.0 * kPi))
        throw domain_error("delta_tilde_from_zeros: T_max must exceed 2 pi");
    if (T_max > catalog.t_max * (1.0 + 1e-12))
        throw coverage_error("delta_tilde_from_zeros: catalog ends at t = " +
                             repr_double(catalog.t_max) + " but T_max = " +
                             repr_double(T_max));
    const double L = std::log(x);
    const double x32 = x * std::sqrt(x);
    KahanSum zs;
    for (double t : catalog.ordinates) {
        if (t > T_max) break;
        Complex rho(0.5, t);
        zs.add(2.0 * (std::exp(Complex(0.0, t * L)) / (rho * (rho + 1.0))).real());
    }
    KahanSum triv;
    for (int n = 1; n <= n_trivial; ++n)
        triv.add(std::pow(x, 1.0 - 2.0 * n) / (2.0 * n * (2.0 * n - 1.0)));
    ZeroSumValue out;
    out.value = -x32 * zs.value() - x * kLog2Pi - triv.value();
    out.zero_tail = x32 * (std::log(T_max / (2.0 * kPi)) + 1.0) / (kPi * T_max);
    return out;
}

OffsetFit offset_fit(const std::vector<double>& xs, double T_max,
                     const MangoldtTable& table, const ZeroCatalog& catalog,
                     int n_trivial) {
    if (xs.size() < 20)
        throw domain_error("offset_fit: needs at least 20 sample points, got " +
                           std::to_string(xs.size()));
    const double hi = static_cast<double>(table.n_max) / 2.0;
    for (double x : xs)
        if (!(x >= 2.0 && x <= hi))
            throw domain_error("offset_fit: sample x = " + repr_double(x) +
                               " outside [2, n_max/2]");
    std::vector<double> diffs;
    diffs.reserve(xs.size());
    KahanSum mean;
    for (double x : xs) {
        double arith = table.sample(x).delta_tilde;
        double zside = delta_tilde_from_zeros(x, T_max, catalog, n_trivial).value;
        diffs.push_back(arith - zside);
        mean.add(arith - zside);
    }
    auto [lo_it, hi_it] = std::minmax_element(diffs.begin(), diffs.end());
    OffsetFit fit;
    fit.c = mean.value() / static_cast<double>(xs.size());
    fit.spread = *hi_it - *lo_it;
    std::vector<double> scales;
    scales.reserve(xs.size());
    for (double x : xs) scales.push_back(x * std::sqrt(x));
    std::nth_element(scales.begin(), scales.begin() + scales.size() / 2, scales.end());
    double threshold = 0.1 * scales[scales.size() / 2];
    if (fit.spread > threshold)
        throw fit_rejected_error("offset_fit: spread " + repr_double(fit.spread) +
                                 " exceeds 0.1 * median scale " +
                                 repr_double(threshold));
    return fit;
}

double im_contour_term(double T, double X, const QuadratureSpec& spec) {
    return arctan_relation(T, X, spec).f1 - kPi;
}

InverseTransformCheck inverse_transform_check(double s, double X,
                                              const MangoldtTable& table,
                                              double T_cut,
                                              const QuadratureSpec& spec) {
    if (!(s > 1.0))
        throw domain_error("inverse_transform_check: requires real s > 1");
    if (!(T_cut > 1.0))
        throw domain_error("inverse_transform_check: T_cut must exceed 1");
    std::uint64_t n_limit = checked_limit(X, table, true, "inverse_transform_check");

    struct Term {
        double ln_n, amp;
    };
    std::vector<Term> terms;
    for (std::uint64_t n = 2; n <= n_limit; ++n) {
        double L = table.values[n];
        if (L == 0.0) continue;
        double dn = static_cast<double>(n);
        terms.push_back({std::log(dn), L / std::sqrt(dn)});
    }

    const double lnX = std::log(X);
    const double sX = std::sqrt(X);
    const double delta = table.psi(X) - X;
    const double q = s - 0.5;
    auto window = [&](double t) {
        double d = q * q + t * t;
        return 4.0 * (s - 1.0) * t / (d * d);
    };
    auto f_X = [&](double t) {
        KahanSum ps;
        for (const Term& tm : terms) ps.add(tm.amp * std::sin(t * tm.ln_n));
        return -ps.value() + delta * std::sin(t * lnX) / (sX * lnX) +
               inner_log_integral_exact(t, X);
    };

    InverseTransformCheck out;
    out.lhs = integrate([&](double t) { return window(t) * f_X(t); }, 0.0, T_cut,
                        std::max(lnX, 1.0), spec);

    KahanSum d0, d1;
    for (const Term& tm : terms) {
        // amp = L / sqrt(n) and n^{-s} = exp(-s ln n), so L n^{-s} follows
        // by scaling with e^{-(s - 1/2) ln n}.
        double pw = tm.amp * std::exp(-q * tm.ln_n);
        d0.add(pw);
        d1.add(pw * tm.ln_n);
    }
    out.rhs = kPi / q *
              (-(s - 1.0) * d1.value() + (s - 1.0) * delta * std::pow(X, -s) +
               1.0 - std::pow(X, 1.0 - s));
    out.rhs_printed = -d0.value() + delta * std::pow(X, -(s + 0.5)) / lnX +
                      (std::pow(X, 1.0 - s) - 1.0) / (1.0 - s);

    KahanSum amp_sum;
    for (const Term& tm : terms) amp_sum.add(tm.amp);
    double sup_f = amp_sum.value() + std::abs(delta) / (sX * lnX) + 4.0;
    out.tail_bound = 2.0 * (s - 1.0) * sup_f / (T_cut * T_cut);
    return out;
}

double residue_component_integral(double s, double n, double T_cut,
                                  const QuadratureSpec& spec) {
    if (!(s > 1.0))
        throw domain_error("residue_component_integral: requires real s > 1");
    if (!(n > 1.0))
        throw domain_error("residue_component_integral: requires n > 1");
    const double ln_n = std::log(n);
    const double amp = 1.0 / std::sqrt(n);
    const double q = s - 0.5;
    return integrate(
        [&](double t) {
            double d = q * q + t * t;
            return 4.0 * (s - 1.0) * t / (d * d) * amp * std::sin(t * ln_n);
        },
        0.0, T_cut, std::max(ln_n, 1.0), spec);
}

double residue_component_closed(double s, double n) {
    if (!(s > 1.0))
        throw domain_error("residue_component_closed: requires real s > 1");
    if (!(n > 1.0))
        throw domain_error("residue_component_closed: requires n > 1");
    return kPi * (s - 1.0) * std::log(n) * std::pow(n, -s) / (s - 0.5);
}

}  // namespace zexp
