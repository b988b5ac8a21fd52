#include "zexp/mangoldt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "zexp/errors.hpp"
#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"

namespace zexp {

namespace {
constexpr std::uint32_t kCacheVersion = 1;
constexpr char kMagic[4] = {'Z', 'E', 'X', 'P'};
constexpr std::uint64_t kSegment = 1ull << 20;

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= limit; q += p) comp[q] = true;
    }
    return primes;
}

std::uint64_t table_checksum(const std::vector<double>& values, std::uint64_t n_max) {
    std::uint64_t h = fnv1a_doubles(values);
    return fnv1a(&n_max, sizeof(n_max), h);
}

void build_prefixes(MangoldtTable& t) {
    t.prefix1.assign(t.n_max + 1, 0.0);
    t.prefix2.assign(t.n_max + 1, 0.0);
    KahanSum s1, s2;
    for (std::uint64_t n = 1; n <= t.n_max; ++n) {
        double v = t.values[n];
        if (v != 0.0) {
            s1.add(v);
            s2.add(static_cast<double>(n) * v);
        }
        t.prefix1[n] = s1.value();
        t.prefix2[n] = s2.value();
    }
}
}  // namespace

double von_mangoldt(std::uint64_t n) {
    if (n == 0) throw domain_error("von_mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    std::uint64_t m = n;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            while (m % d == 0) m /= d;
            break;
        }
    }
    if (p == 0) return std::log(static_cast<double>(n));  // n prime
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

MangoldtTable build_table(std::uint64_t n_max, std::uint64_t memory_budget_bytes,
                          int threads) {
    if (n_max < 2) throw domain_error("build_table: n_max must be >= 2");
    std::uint64_t need = 3 * sizeof(double) * (n_max + 1);
    if (need > memory_budget_bytes)
        throw resource_error("build_table: n_max " + std::to_string(n_max) +
                             " needs " + std::to_string(need) +
                             " bytes, over the configured budget of " +
                             std::to_string(memory_budget_bytes) + " bytes");

    MangoldtTable t;
    t.n_max = n_max;
    t.values.assign(n_max + 1, 0.0);

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n_max)));
    while ((root + 1) * (root + 1) <= n_max) ++root;
    while (root * root > n_max) --root;
    auto primes = base_primes(std::max<std::uint64_t>(root, 2));

    std::int64_t n_segments = static_cast<std::int64_t>((n_max - 1) / kSegment) + 1;
    parallel_for(n_segments, [&](std::int64_t seg) {
        std::uint64_t lo = 2 + static_cast<std::uint64_t>(seg) * kSegment;
        std::uint64_t hi = std::min(n_max, lo + kSegment - 1);
        std::vector<char> comp(hi - lo + 1, 0);
        for (std::uint32_t p : primes) {
            std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
            if (pp > hi) break;
            std::uint64_t start = std::max(pp, ((lo + p - 1) / p) * p);
            for (std::uint64_t q = start; q <= hi; q += p) comp[q - lo] = 1;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!comp[n - lo]) t.values[n] = std::log(static_cast<double>(n));
        // Prime powers p^k, k >= 2, have p <= sqrt(n_max): overwrite with log p.
        for (std::uint32_t p : primes) {
            std::uint64_t q = static_cast<std::uint64_t>(p) * p;
            if (q > hi) break;
            while (q < lo && q <= n_max / p) q *= p;
            double lp = std::log(static_cast<double>(p));
            while (q >= lo && q <= hi) {
                t.values[q] = lp;
                if (q > n_max / p) break;
                q *= p;
            }
        }
    }, threads);

    build_prefixes(t);
    t.checksum = table_checksum(t.values, t.n_max);
    return t;
}

double MangoldtTable::psi(double x) const {
    if (!(x > 0.0)) throw domain_error("psi: x must be positive");
    if (x > static_cast<double>(n_max))
        throw coverage_error("psi: x = " + repr_double(x) +
                             " exceeds table coverage n_max = " + std::to_string(n_max));
    std::uint64_t m = static_cast<std::uint64_t>(x);
    if (m < 1) return 0.0;
    return prefix1[m];
}

double MangoldtTable::psi_tilde(double x) const {
    if (!(x > 0.0)) throw domain_error("psi_tilde: x must be positive");
    if (x > static_cast<double>(n_max))
        throw coverage_error("psi_tilde: x = " + repr_double(x) +
                             " exceeds table coverage n_max = " + std::to_string(n_max));
    std::uint64_t m = static_cast<std::uint64_t>(x);
    if (m < 1) return 0.0;
    return prefix1[m] * x - prefix2[m];
}

ChebyshevSample MangoldtTable::sample(double x) const {
    ChebyshevSample s;
    s.x = x;
    s.psi = psi(x);
    s.psi_tilde = psi_tilde(x);
    s.delta = s.psi - x;
    s.delta_tilde = s.psi_tilde - 0.5 * x * x;
    return s;
}

void save_cache(const MangoldtTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("save_cache: cannot open " + path + " for writing");
    out.write(kMagic, 4);
    std::uint32_t version = kCacheVersion;
    out.write(reinterpret_cast<const char*>(&version), sizeof(version));
    out.write(reinterpret_cast<const char*>(&table.n_max), sizeof(table.n_max));
    out.write(reinterpret_cast<const char*>(table.values.data()),
              static_cast<std::streamsize>(table.values.size() * sizeof(double)));
    out.write(reinterpret_cast<const char*>(&table.checksum), sizeof(table.checksum));
    if (!out) throw parse_error("save_cache: write failed for " + path);
}

MangoldtTable load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("load_cache: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw parse_error("load_cache: bad magic in " + path);
    std::uint32_t version = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof(version));
    if (!in || version != kCacheVersion)
        throw parse_error("load_cache: unsupported cache version " +
                          std::to_string(version) + " in " + path +
                          " (expected " + std::to_string(kCacheVersion) + ")");
    MangoldtTable t;
    in.read(reinterpret_cast<char*>(&t.n_max), sizeof(t.n_max));
    if (!in || t.n_max < 2) throw parse_error("load_cache: bad n_max in " + path);
    t.values.assign(t.n_max + 1, 0.0);
    in.read(reinterpret_cast<char*>(t.values.data()),
            static_cast<std::streamsize>(t.values.size() * sizeof(double)));
    std::uint64_t stored = 0;
    in.read(reinterpret_cast<char*>(&stored), sizeof(stored));
    if (!in) throw parse_error("load_cache: truncated file " + path);
    std::uint64_t computed = table_checksum(t.values, t.n_max);
    if (stored != computed)
        throw parse_error("load_cache: checksum mismatch in " + path);
    t.checksum = stored;
    build_prefixes(t);
    return t;
}

}  // namespace zexp
