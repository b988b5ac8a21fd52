#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zexp {

// Ordinates of nontrivial zeros, strictly increasing, all positive.
// Immutable after parse; queries are pure.
struct ZeroCatalog {
    std::vector<double> ordinates;
    double t_max = 0.0;   // coverage height; defaults to the last ordinate
    std::string source;   // free-text provenance

    // #{ t_i <= T }. T beyond coverage is a coverage error.
    std::int64_t count_N(double T) const;

    // S(T) = N(T) - g(T). Queries exactly at an ordinate (within 1e-9) are
    // refused: S jumps there and the value is ambiguous.
    double S_of_T(double T) const;

    // S1(T) = int_0^T S. Exact zero part sum_{t_i <= T} (T - t_i) minus the
    // quadrature of g.
    double S1_of_T(double T) const;
};

// One decimal ordinate per line; '#' comments and blank lines skipped.
// Validates positivity, strict monotonicity, and a loose Riemann-von Mangoldt
// envelope |count(T) - ((T/2pi) ln(T/(2 pi e)) + 7/8)| <= 2 above T = 20.
ZeroCatalog parse_zero_file(std::istream& in, const std::string& source_name = "");
ZeroCatalog load_zero_file(const std::string& path);

// Shortest round-trip decimals, one per line; parse . serialize is
// byte-identical on files written the same way.
void serialize_catalog(const ZeroCatalog& catalog, std::ostream& out);

// CSV rows T,N,S,S1 over an inclusive grid. At a grid point that collides
// with an ordinate the right-continuous S value is emitted.
void export_catalog_csv(const ZeroCatalog& catalog, std::ostream& out,
                        double t0, double t1, double step);

}  // namespace zexp
