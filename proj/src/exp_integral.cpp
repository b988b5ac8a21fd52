#include "zexp/exp_integral.hpp"

#include <cmath>

#include "zexp/errors.hpp"
#include "zexp/numeric.hpp"

namespace zexp {

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;

// E1(z) by the standard continued fraction with the modified Lentz scheme.
// Converges for z off the negative real axis; fastest when |z| is large.
Complex e1_continued_fraction(Complex z) {
    const double tiny = 1e-300;
    Complex f = tiny, c = f, d = 0.0;
    // E1(z) = e^{-z} / (z + 1/(1 + 1/(z + 2/(1 + 2/(z + ...))))).
    for (int j = 1; j <= 400; ++j) {
        Complex a, b;
        if (j == 1) {
            a = 1.0;
            b = z;
        } else if (j % 2 == 0) {
            a = static_cast<double>(j / 2);
            b = 1.0;
        } else {
            a = static_cast<double>(j / 2);
            b = z;
        }
        d = b + a * d;
        if (std::abs(d) == 0.0) d = tiny;
        c = b + a / c;
        if (std::abs(c) == 0.0) c = tiny;
        d = 1.0 / d;
        Complex delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return std::exp(-z) * f;
    }
    throw quadrature_error("E1 continued fraction did not converge at z = (" +
                           repr_double(z.real()) + ", " + repr_double(z.imag()) + ")");
}
}  // namespace

Complex exp_integral_h(Complex w) {
    double r = std::abs(w);
    if (r == 0.0) return 0.0;
    if (r <= 25.0) {
        Complex acc = 0.0, term = 1.0;
        for (int k = 1; k <= 250; ++k) {
            term *= w / static_cast<double>(k);
            Complex add = term / static_cast<double>(k);
            acc += add;
            if (std::abs(add) < 1e-18 * (1.0 + std::abs(acc)) && k > 4) break;
        }
        return acc;
    }
    return -kEulerGamma - std::log(-w) - e1_continued_fraction(-w);
}

double inner_log_integral_exact(double T, double X) {
    if (T == 0.0 || X <= 1.0) return 0.0;
    double L = std::log(X);
    return exp_integral_h(Complex(0.5 * L, T * L)).imag();
}

double inner_log_integral_quad(double T, double X, const QuadratureSpec& spec) {
    if (T == 0.0 || X <= 1.0) return 0.0;
    double L = std::log(X);
    auto f = [T](double u) {
        double ratio;
        if (u < 1e-4) {
            double s = T * u;
            ratio = T * (1.0 - s * s / 6.0 + s * s * s * s / 120.0);
        } else {
            ratio = std::sin(T * u) / u;
        }
        return std::exp(0.5 * u) * ratio;
    };
    return integrate(f, 0.0, L, T, spec);
}

}  // namespace zexp
