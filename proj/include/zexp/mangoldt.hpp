#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zexp {

// One consistent bundle of the Chebyshev quantities at x.
struct ChebyshevSample {
    double x;
    double psi;         // sum of Lambda(n) for n <= x
    double psi_tilde;   // sum of Lambda(n) (x - n) for n <= x
    double delta;       // psi - x
    double delta_tilde; // psi_tilde - x^2/2
};

// Sieved von Mangoldt values with prefix sums for O(1) psi / psi_tilde
// queries. Immutable after build; safe to share across threads.
struct MangoldtTable {
    std::uint64_t n_max = 0;
    std::vector<double> values;   // values[n] = Lambda(n), indices 0..n_max
    std::vector<double> prefix1;  // prefix1[m] = sum_{n<=m} Lambda(n)
    std::vector<double> prefix2;  // prefix2[m] = sum_{n<=m} n Lambda(n)
    std::uint64_t checksum = 0;   // FNV-1a over values bytes then n_max

    double psi(double x) const;
    double psi_tilde(double x) const;
    ChebyshevSample sample(double x) const;
};

// Lambda(n) by factoring n directly (no table needed). n = 0 is a domain error.
double von_mangoldt(std::uint64_t n);

// Segmented sieve; peak memory beyond the output is one segment. Throws
// resource_error when the output arrays would exceed memory_budget_bytes.
MangoldtTable build_table(std::uint64_t n_max,
                          std::uint64_t memory_budget_bytes = 4ull << 30,
                          int threads = 0);

// Binary cache: magic "ZEXP", format version u32, n_max u64, the raw
// little-endian double array of values, trailing checksum u64.
void save_cache(const MangoldtTable& table, const std::string& path);
MangoldtTable load_cache(const std::string& path);

}  // namespace zexp
