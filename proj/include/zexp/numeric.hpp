#pragma once

#include <charconv>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace zexp {

// Compensated accumulator; the error term survives across += so long runs of
// small addends do not drown in a large partial sum.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// FNV-1a over raw bytes; used for cache validation and build determinism checks.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 14695981039346656037ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a_doubles(const std::vector<double>& v,
                                   std::uint64_t h = 14695981039346656037ull) {
    return v.empty() ? h : fnv1a(v.data(), v.size() * sizeof(double), h);
}

// Shortest decimal representation that round-trips to the same double.
// All machine-readable output goes through this so reruns are byte-identical.
inline std::string repr_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = (n == 1) ? a : a + (b - a) * i / (n - 1);
    return xs;
}

}  // namespace zexp
