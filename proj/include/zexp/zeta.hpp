#pragma once

#include <complex>
#include <cstdint>

#include "zexp/mangoldt.hpp"
#include "zexp/quadrature.hpp"

namespace zexp {

using Complex = std::complex<double>;

struct DirichletValue {
    Complex value;      // -sum_{n<=n_max} Lambda(n) n^{-s}
    double tail_bound;  // 1.04 sigma/(sigma-1) n_max^{1-sigma}, from psi(u) < 1.04u
};

// zeta'/zeta(s) by truncated Dirichlet series over the sieve. Re s > 1.
DirichletValue zeta_logderiv_dirichlet(Complex s, std::uint64_t n_max,
                                       const MangoldtTable& table, int threads = 0);

// g(t) = 1 - t ln(pi)/(2 pi) + arg Gamma(1/4 + i t/2)/pi, continuous branch.
// The zero count satisfies N(T) = g(T) + S(T).
double smooth_count_g(double t);

// g'(t) = -ln(pi)/(2 pi) + Re digamma(1/4 + i t/2)/(2 pi).
double smooth_count_g_prime(double t);

// d(T) = (1/2) arg Gamma(1/2 + iT) - arg Gamma(1/4 + iT/2)
//        - T ln2/2 - arctan(sinh(pi T))/4; identically zero.
double d_identity(double T);

// Gamma^2(1-z) Gamma^4(z/2) sin^2(pi z/2)
// / (Gamma^2(z) Gamma^4(1/2 - z/2) 4^{1-2z} cos^2(pi z/2)); identically one.
// Every numerically singular point of the factors is an integer z; proximity
// under 1e-6 raises pole_error.
Complex f_identity(Complex z);

struct ArctanRelation {
    double f1;        // sqrt(X) int_0^T [2cos(t lnX) + 4t sin(t lnX)]/(1+4t^2) dt
    double f2;        // int_1^X sin(T ln y)/(sqrt(y) ln y) dy
    double residual;  // f1 - f2 - arctan(2T), zero in exact arithmetic
};

ArctanRelation arctan_relation(double T, double X,
                               const QuadratureSpec& spec = {});

}  // namespace zexp
