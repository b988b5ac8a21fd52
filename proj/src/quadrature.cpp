#include "zexp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zexp/errors.hpp"
#include "zexp/gauss.hpp"
#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"

namespace zexp {

namespace {
std::vector<double> oscillation_edges(double a, double b, double freq,
                                      int per_period, int min_panels) {
    double span = b - a;
    double cap = span / min_panels;
    if (freq > 0.0)
        cap = std::min(cap, 2.0 * std::numbers::pi / freq / per_period);
    int n = std::max(min_panels, static_cast<int>(std::ceil(span / cap)));
    std::vector<double> edges(n + 1);
    for (int i = 0; i <= n; ++i) edges[i] = a + span * i / n;
    edges.back() = b;
    return edges;
}

std::vector<double> halve(const std::vector<double>& edges) {
    std::vector<double> out;
    out.reserve(edges.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        out.push_back(edges[i]);
        out.push_back(0.5 * (edges[i] + edges[i + 1]));
    }
    out.push_back(edges.back());
    return out;
}
}  // namespace

double integrate_fixed(const std::function<double(double)>& f,
                       const std::vector<double>& edges, int gl_order) {
    const GaussRule& rule = gauss_legendre(gl_order);
    auto panel_value = [&](std::size_t i) {
        double lo = edges[i], hi = edges[i + 1];
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        KahanSum s;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            s.add(rule.weights[k] * f(mid + half * rule.nodes[k]));
        return half * s.value();
    };
    std::int64_t n_panels = static_cast<std::int64_t>(edges.size()) - 1;
    if (n_panels <= 0) return 0.0;
    if (n_panels >= 256) {
        return parallel_chunk_sum(n_panels, 64, [&](std::int64_t b, std::int64_t e) {
            KahanSum s;
            for (std::int64_t i = b; i < e; ++i)
                s.add(panel_value(static_cast<std::size_t>(i)));
            return s.value();
        });
    }
    KahanSum s;
    for (std::int64_t i = 0; i < n_panels; ++i)
        s.add(panel_value(static_cast<std::size_t>(i)));
    return s.value();
}

double integrate_edges(const std::function<double(double)>& f,
                       const std::vector<double>& edges, double freq,
                       const QuadratureSpec& spec) {
    if (edges.size() < 2 || edges.front() >= edges.back()) return 0.0;
    // Subdivide each provided piece by the oscillation cap.
    std::vector<double> work;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto piece = oscillation_edges(edges[i], edges[i + 1], freq,
                                       spec.panels_per_period, 1);
        work.insert(work.end(), piece.begin(), piece.end() - 1);
    }
    work.push_back(edges.back());

    double prev = integrate_fixed(f, work, spec.gl_order);
    for (int pass = 0; pass < spec.max_halvings; ++pass) {
        work = halve(work);
        double cur = integrate_fixed(f, work, spec.gl_order);
        if (std::abs(cur - prev) <= spec.abs_tol) return cur;
        prev = cur;
    }
    throw quadrature_error("quadrature did not converge: achieved estimate " +
                           repr_double(std::abs(prev)) + " vs abs_tol " +
                           repr_double(spec.abs_tol));
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double freq, const QuadratureSpec& spec) {
    if (!(b > a)) return 0.0;
    return integrate_edges(f, {a, b}, freq, spec);
}

}  // namespace zexp
