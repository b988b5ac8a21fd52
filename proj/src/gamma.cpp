#include "zexp/gamma.hpp"

#include <cmath>
#include <numbers>

#include "zexp/errors.hpp"
#include "zexp/numeric.hpp"

namespace zexp {

namespace {
// B_{2k} / ((2k)(2k-1)) for the log-Gamma Stirling series.
constexpr double kLogGammaStirling[] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156, -3617.0 / 122400, 43867.0 / 244188,
    -174611.0 / 125400,
};
// B_{2k} / (2k) for the digamma Stirling series.
constexpr double kDigammaStirling[] = {
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132,
    -691.0 / 32760, 1.0 / 12, -3617.0 / 8160, 43867.0 / 14364,
    -174611.0 / 6600,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

bool near_nonpositive_integer(Complex z, double eps) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < eps && std::abs(z.imag()) < eps;
}

// Stirling expansion; requires |z| large with Re z > 0.
Complex log_gamma_stirling(Complex z) {
    Complex lz = std::log(z);
    Complex acc = (z - 0.5) * lz - z + kHalfLog2Pi;
    Complex zi = 1.0 / z;
    Complex zi2 = zi * zi;
    Complex p = zi;
    for (double c : kLogGammaStirling) {
        acc += c * p;
        p *= zi2;
    }
    return acc;
}
}  // namespace

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12))
        throw pole_error("log_gamma pole at z = (" + repr_double(z.real()) +
                         ", " + repr_double(z.imag()) + ")");
    if (z.real() < 0.5 && std::abs(z.imag()) < 40.0) {
        // Reflection; the sin log makes Im defined only mod 2*pi here.
        Complex s = std::sin(std::numbers::pi * z);
        if (std::abs(s) == 0.0)
            throw pole_error("log_gamma pole at z = (" + repr_double(z.real()) +
                             ", " + repr_double(z.imag()) + ")");
        return std::log(std::numbers::pi) - std::log(s) - log_gamma(1.0 - z);
    }
    // Shift into the Stirling region. Principal logs of z, z+1, ... are each
    // continuous on the right half plane, so the accumulated branch is the
    // continuous one along vertical lines.
    Complex shift = 0.0;
    while (z.real() < 10.0 || std::abs(z) < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12))
        throw pole_error("digamma pole at z = (" + repr_double(z.real()) + ", " +
                         repr_double(z.imag()) + ")");
    if (z.real() < 0.5 && std::abs(z.imag()) < 40.0) {
        // psi(z) = psi(1-z) - pi*cot(pi*z)
        Complex pz = std::numbers::pi * z;
        return digamma(1.0 - z) - std::numbers::pi * std::cos(pz) / std::sin(pz);
    }
    Complex shift = 0.0;
    while (z.real() < 10.0 || std::abs(z) < 12.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    Complex acc = std::log(z) - 0.5 / z;
    Complex zi2 = 1.0 / (z * z);
    Complex p = zi2;
    for (double c : kDigammaStirling) {
        acc -= c * p;
        p *= zi2;
    }
    return acc - shift;
}

double digamma_re_half_line(double t) {
    return digamma(Complex(0.5, t)).real();
}

double atan_sinh(double x) {
    if (x < 0.0) return -atan_sinh(-x);
    if (x <= 30.0) return std::atan(std::sinh(x));
    // 1/sinh(x) = 2 e^{-x} / (1 - e^{-2x}); atan(y) = pi/2 - atan(1/y), y > 0.
    double inv = 2.0 * std::exp(-x) / (1.0 - std::exp(-2.0 * x));
    return std::numbers::pi / 2 - std::atan(inv);
}

}  // namespace zexp
