#include "zexp/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "zexp/errors.hpp"
#include "zexp/gamma.hpp"
#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"

namespace zexp {

namespace {
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog4 = 1.3862943611198906188;
}  // namespace

DirichletValue zeta_logderiv_dirichlet(Complex s, std::uint64_t n_max,
                                       const MangoldtTable& table, int threads) {
    double sigma = s.real();
    if (sigma <= 1.0)
        throw domain_error("zeta_logderiv_dirichlet: Re s must exceed 1, got " +
                           repr_double(sigma));
    if (n_max > table.n_max)
        throw coverage_error("zeta_logderiv_dirichlet: n_max " + std::to_string(n_max) +
                             " exceeds table coverage " + std::to_string(table.n_max));

    // Deterministic fixed chunking; per-chunk compensated partials combined in
    // chunk order, so any thread count reproduces the single-thread bits.
    std::int64_t count = static_cast<std::int64_t>(n_max) - 1;  // n = 2..n_max
    constexpr std::int64_t kChunk = 1 << 16;
    std::int64_t n_chunks = count <= 0 ? 0 : (count + kChunk - 1) / kChunk;
    std::vector<Complex> partial(n_chunks, Complex(0.0, 0.0));
    parallel_for(n_chunks, [&](std::int64_t c) {
        std::int64_t b = 2 + c * kChunk;
        std::int64_t e = std::min<std::int64_t>(static_cast<std::int64_t>(n_max), b + kChunk - 1);
        KahanSum re, im;
        for (std::int64_t n = b; n <= e; ++n) {
            double lam = table.values[static_cast<std::size_t>(n)];
            if (lam == 0.0) continue;
            Complex term = lam * std::exp(-s * std::log(static_cast<double>(n)));
            re.add(term.real());
            im.add(term.imag());
        }
        partial[c] = Complex(re.value(), im.value());
    }, threads);
    KahanSum re, im;
    for (const Complex& p : partial) {
        re.add(p.real());
        im.add(p.imag());
    }

    DirichletValue out;
    out.value = -Complex(re.value(), im.value());
    out.tail_bound = 1.04 * sigma / (sigma - 1.0) *
                     std::pow(static_cast<double>(n_max), 1.0 - sigma);
    return out;
}

double smooth_count_g(double t) {
    if (t < 0.0) throw domain_error("smooth_count_g: t must be >= 0");
    if (t == 0.0) return 1.0;
    double arg = log_gamma(Complex(0.25, 0.5 * t)).imag();
    return 1.0 - t * kLogPi / (2.0 * std::numbers::pi) + arg / std::numbers::pi;
}

double smooth_count_g_prime(double t) {
    return -kLogPi / (2.0 * std::numbers::pi) +
           digamma(Complex(0.25, 0.5 * t)).real() / (2.0 * std::numbers::pi);
}

double d_identity(double T) {
    if (!(T > 0.0)) throw domain_error("d_identity: T must be positive");
    double a1 = log_gamma(Complex(0.5, T)).imag();
    double a2 = log_gamma(Complex(0.25, 0.5 * T)).imag();
    return 0.5 * a1 - a2 - 0.5 * T * std::numbers::ln2 -
           0.25 * atan_sinh(std::numbers::pi * T);
}

Complex f_identity(Complex z) {
    double nearest = std::round(z.real());
    if (std::abs(z.real() - nearest) < 1e-6 && std::abs(z.imag()) < 1e-6)
        throw pole_error("f_identity: z within 1e-6 of the integer " +
                         repr_double(nearest) +
                         " where a constituent factor is singular");
    Complex lg = 2.0 * log_gamma(1.0 - z) + 4.0 * log_gamma(0.5 * z) -
                 2.0 * log_gamma(z) - 4.0 * log_gamma(0.5 - 0.5 * z) -
                 (1.0 - 2.0 * z) * kLog4;
    Complex half_pi_z = 0.5 * std::numbers::pi * z;
    Complex t = std::sin(half_pi_z) / std::cos(half_pi_z);
    return std::exp(lg) * t * t;
}

ArctanRelation arctan_relation(double T, double X, const QuadratureSpec& spec) {
    if (T < 0.0) throw domain_error("arctan_relation: T must be >= 0");
    if (!(X > 1.0)) throw domain_error("arctan_relation: X must exceed 1");
    ArctanRelation out;
    if (T == 0.0) {
        out.f1 = out.f2 = out.residual = 0.0;
        return out;
    }
    double L = std::log(X);
    // Both integrands oscillate no faster than max(T, ln X); that frequency
    // caps the panel width at pi/(4 max(T, ln X)).
    double freq = std::max(T, L);
    auto f1_integrand = [L](double t) {
        return (2.0 * std::cos(t * L) + 4.0 * t * std::sin(t * L)) /
               (1.0 + 4.0 * t * t);
    };
    out.f1 = std::sqrt(X) * integrate(f1_integrand, 0.0, T, freq, spec);
    auto f2_integrand = [T](double u) {
        double ratio;
        if (u < 1e-4) {
            double s = T * u;
            ratio = T * (1.0 - s * s / 6.0 + s * s * s * s / 120.0);
        } else {
            ratio = std::sin(T * u) / u;
        }
        return std::exp(0.5 * u) * ratio;
    };
    out.f2 = integrate(f2_integrand, 0.0, L, freq, spec);
    out.residual = out.f1 - out.f2 - std::atan(2.0 * T);
    return out;
}

}  // namespace zexp
