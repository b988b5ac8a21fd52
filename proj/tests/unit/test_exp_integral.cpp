#include <doctest.h>

#include <cmath>
#include <complex>

#include "zexp/exp_integral.hpp"
#include "zexp/quadrature.hpp"

using namespace zexp;
using Cx = std::complex<double>;

namespace {

void check_h(Cx w, double re, double im, double tol) {
    Cx v = exp_integral_h(w);
    CHECK(v.real() == doctest::Approx(re).epsilon(tol));
    CHECK(v.imag() == doctest::Approx(im).epsilon(tol));
}

}  // namespace

TEST_SUITE("exp_integral") {

TEST_CASE("h(w) reference values, series region") {
    check_h({0.5, 0.5}, 0.48330058594557563, 0.63864985929358237, 1e-14);
    check_h({2.0, 10.0}, -3.3543757474101642, 2.3368548148807626, 1e-13);
    // |w| = 24.2 sits in the cancellation band of the series; ~2e-8.
    check_h({3.0, 24.0}, -4.4851151724750043, 1.2806979083791813, 2e-8);
    check_h({1e-3, 1e-3}, 0.00099999988884721558, 0.0010005001111111045, 1e-14);
}

TEST_CASE("h(w) reference values, continued-fraction region") {
    check_h({5.0, 40.0}, -1.782885548470363, 4.4170370915554546, 1e-12);
    check_h({8.0, 120.0}, 10.181914184096495, -17.679653247649615, 1e-12);
}

TEST_CASE("h(w) small-argument taylor expansion") {
    // h(w) = w + w^2/4 + w^3/18 + w^4/96 + O(w^5).
    Cx w(1e-4, 2e-4);
    Cx taylor = w + w * w / 4.0 + w * w * w / 18.0 + w * w * w * w / 96.0;
    Cx v = exp_integral_h(w);
    CHECK(std::abs(v - taylor) <= 1e-18);
    CHECK(std::abs(exp_integral_h(Cx(0.0, 0.0))) == 0.0);
}

TEST_CASE("h satisfies its defining derivative across both branch regions") {
    // h'(w) = (e^w - 1)/w. A central difference validates the series branch,
    // the continued-fraction branch, and continuity across |w| = 25.
    // eps is coarse on purpose: the series value carries absolute noise up
    // to ~1e-11 that a finer stencil would amplify through the 1/eps factor.
    const double eps = 1e-4;
    for (Cx w : {Cx{2.0, 5.0}, Cx{3.0, 15.0}, Cx{3.0, 26.5}, Cx{6.0, 60.0}, Cx{6.9, 180.0}}) {
        Cx num = (exp_integral_h(w + eps) - exp_integral_h(w - eps)) / (2.0 * eps);
        Cx exact = (std::exp(w) - 1.0) / w;
        CHECK(std::abs(num - exact) <= 1e-7 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("h is continuous across the branch switch at |w| = 25") {
    // Walk a short ray crossing the switch radius; the series side carries
    // ~1e-8 cancellation noise there, so the step differences must stay at
    // that scale (a branch inconsistency would show up as an O(1) jump).
    Cx dir = Cx(3.0, 24.8) / std::abs(Cx(3.0, 24.8));
    Cx prev = exp_integral_h(24.90 * dir);
    for (double r = 24.92; r <= 25.10001; r += 0.02) {
        Cx cur = exp_integral_h(r * dir);
        Cx wm = (r - 0.01) * dir;  // midpoint rule for the step prediction
        Cx step = 0.02 * dir * (std::exp(wm) - 1.0) / wm;
        CHECK(std::abs(cur - prev - step) <= 1e-6);
        prev = cur;
    }
}

TEST_CASE("h commutes with conjugation on test rays") {
    for (Cx w : {Cx{1.5, 8.0}, Cx{4.0, 55.0}}) {
        Cx a = exp_integral_h(std::conj(w));
        Cx b = std::conj(exp_integral_h(w));
        CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("inner log integral, exact route reference values") {
    // f2(T, X) = Im h((1/2 + iT) ln X).
    CHECK(inner_log_integral_exact(1.0, 10.0) == doctest::Approx(2.9380898524481732).epsilon(1e-13));
    CHECK(inner_log_integral_exact(2.0, 2.0) == doctest::Approx(1.4755173003356173).epsilon(1e-13));
    // The two arguments below sit near the series/continued-fraction switch
    // where the alternating series cancels about eight digits; the absolute
    // error there is ~1e-8, not machine precision.
    CHECK(inner_log_integral_exact(5.0, 100.0) == doctest::Approx(1.8701793638479087).epsilon(5e-8));
    CHECK(inner_log_integral_exact(3.5, 1000.0) == doctest::Approx(0.85986005319180021).epsilon(5e-8));
    CHECK(inner_log_integral_exact(4.0, 1000.0) == doctest::Approx(2.6628483121483008).epsilon(1e-11));
    CHECK(inner_log_integral_exact(8.0, 1000.0) == doctest::Approx(1.4488254691303188).epsilon(1e-11));
    CHECK(inner_log_integral_exact(30.0, 1000.0) == doctest::Approx(1.4356518631555752).epsilon(1e-10));
    CHECK(inner_log_integral_exact(14.134725141734695, 1e6) ==
          doctest::Approx(-2.8102001970728749).epsilon(1e-10));
    CHECK(inner_log_integral_exact(23.0, 1e6) == doctest::Approx(4.391435517992359).epsilon(1e-10));
}

TEST_CASE("exact and quadrature routes agree on a grid") {
    QuadratureSpec spec;
    for (double T : {0.5, 2.0, 5.0, 9.0, 14.0}) {
        for (double X : {5.0, 50.0, 500.0, 5000.0}) {
            double ex = inner_log_integral_exact(T, X);
            double qd = inner_log_integral_quad(T, X, spec);
            CHECK(ex == doctest::Approx(qd).epsilon(5e-8));
        }
    }
}

TEST_CASE("inner integral vanishes at X = 1") {
    CHECK(inner_log_integral_exact(7.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
}

}  // TEST_SUITE
