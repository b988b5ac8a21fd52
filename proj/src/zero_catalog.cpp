#include "zexp/zero_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>

#include "zexp/errors.hpp"
#include "zexp/numeric.hpp"
#include "zexp/quadrature.hpp"
#include "zexp/zeta.hpp"

namespace zexp {

namespace {
double rvm_envelope(double T) {
    double c = T / (2.0 * std::numbers::pi);
    return c * std::log(c / std::numbers::e) + 0.875;
}

void validate(const ZeroCatalog& cat) {
    for (std::size_t k = 0; k < cat.ordinates.size(); ++k) {
        double t = cat.ordinates[k];
        if (t < 20.0) continue;
        double f = rvm_envelope(t);
        double above = static_cast<double>(k + 1) - f;  // count at t_k
        double below = static_cast<double>(k) - f;      // count just under t_k
        if (std::abs(above) > 2.0 && std::abs(below) > 2.0)
            throw parse_error("zero catalog fails the Riemann-von Mangoldt envelope at t = " +
                              repr_double(t));
    }
}
}  // namespace

ZeroCatalog parse_zero_file(std::istream& in, const std::string& source_name) {
    ZeroCatalog cat;
    cat.source = source_name;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        std::string_view tok(line.data() + b, e - b + 1);
        if (tok.front() == '#') continue;
        double value = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw parse_error("zero file line " + std::to_string(lineno) +
                              ": non-numeric token '" + std::string(tok) + "'");
        if (!(value > 0.0))
            throw parse_error("zero file line " + std::to_string(lineno) +
                              ": ordinate must be positive, got " + repr_double(value));
        if (!cat.ordinates.empty() && value <= cat.ordinates.back())
            throw parse_error("zero file line " + std::to_string(lineno) +
                              ": ordinates must increase strictly (" +
                              repr_double(cat.ordinates.back()) + " then " +
                              repr_double(value) + ")");
        cat.ordinates.push_back(value);
    }
    if (cat.ordinates.empty()) throw parse_error("zero file holds no ordinates");
    cat.t_max = cat.ordinates.back();
    validate(cat);
    return cat;
}

ZeroCatalog load_zero_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open zero file " + path);
    return parse_zero_file(in, path);
}

void serialize_catalog(const ZeroCatalog& catalog, std::ostream& out) {
    for (double t : catalog.ordinates) out << repr_double(t) << '\n';
}

std::int64_t ZeroCatalog::count_N(double T) const {
    if (T > t_max)
        throw coverage_error("count_N: T = " + repr_double(T) +
                             " exceeds catalog coverage t_max = " + repr_double(t_max));
    if (T < 0.0) return 0;
    auto it = std::upper_bound(ordinates.begin(), ordinates.end(), T);
    return static_cast<std::int64_t>(it - ordinates.begin());
}

double ZeroCatalog::S_of_T(double T) const {
    if (T < 0.0) throw domain_error("S_of_T: T must be >= 0");
    std::int64_t n = count_N(T);  // coverage check inside
    auto it = std::lower_bound(ordinates.begin(), ordinates.end(), T - 1e-9);
    if (it != ordinates.end() && std::abs(*it - T) <= 1e-9)
        throw domain_error("S_of_T: T = " + repr_double(T) +
                           " sits on an ordinate; S jumps there");
    return static_cast<double>(n) - smooth_count_g(T);
}

double ZeroCatalog::S1_of_T(double T) const {
    if (T < 0.0) throw domain_error("S1_of_T: T must be >= 0");
    if (T > t_max)
        throw coverage_error("S1_of_T: T = " + repr_double(T) +
                             " exceeds catalog coverage t_max = " + repr_double(t_max));
    if (T == 0.0) return 0.0;
    KahanSum zero_part;
    for (double t : ordinates) {
        if (t > T) break;
        zero_part.add(T - t);
    }
    QuadratureSpec spec;
    spec.abs_tol = 1e-10;
    // g is smooth and slowly varying; panel every few units then refine.
    std::vector<double> edges;
    for (double u = 0.0; u < T; u += 5.0) edges.push_back(u);
    edges.push_back(T);
    double smooth_part = integrate_edges([](double t) { return smooth_count_g(t); },
                                         edges, 0.0, spec);
    return zero_part.value() - smooth_part;
}

void export_catalog_csv(const ZeroCatalog& catalog, std::ostream& out,
                        double t0, double t1, double step) {
    if (t1 > catalog.t_max)
        throw coverage_error("export range end " + repr_double(t1) +
                             " exceeds catalog coverage t_max = " +
                             repr_double(catalog.t_max));
    out << "T,N,S,S1\n";
    for (double T = t0; T <= t1 + 1e-12; T += step) {
        std::int64_t n = catalog.count_N(T);
        double s = static_cast<double>(n) - smooth_count_g(T);
        out << repr_double(T) << ',' << n << ',' << repr_double(s) << ','
            << repr_double(catalog.S1_of_T(T)) << '\n';
    }
}

}  // namespace zexp
