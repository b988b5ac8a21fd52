#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <vector>

#include "zexp/numeric.hpp"
#include "zexp/parallel.hpp"

using namespace zexp;

namespace {

// Reference chunked sum done serially with the same chunk boundaries.
double serial_chunk_sum(std::int64_t n, std::int64_t chunk,
                        const std::function<double(std::int64_t, std::int64_t)>& fn) {
    KahanSum acc;
    for (std::int64_t b = 0; b < n; b += chunk) {
        acc.add(fn(b, std::min(n, b + chunk)));
    }
    return acc.value();
}

double harmonic_chunk(std::int64_t b, std::int64_t e) {
    KahanSum acc;
    for (std::int64_t i = b; i < e; ++i) acc.add(1.0 / static_cast<double>(i + 1));
    return acc.value();
}

}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("chunk sum is bit-identical across thread counts") {
    const std::int64_t n = 1 << 20;
    const std::int64_t chunk = 1 << 12;
    double t1 = parallel_chunk_sum(n, chunk, harmonic_chunk, 1);
    double t2 = parallel_chunk_sum(n, chunk, harmonic_chunk, 2);
    double t4 = parallel_chunk_sum(n, chunk, harmonic_chunk, 4);
    double t7 = parallel_chunk_sum(n, chunk, harmonic_chunk, 7);
    double ref = serial_chunk_sum(n, chunk, harmonic_chunk);
    CHECK(t1 == ref);
    CHECK(t2 == ref);
    CHECK(t4 == ref);
    CHECK(t7 == ref);
}

TEST_CASE("chunk sum value matches the analytic target") {
    const std::int64_t n = 1000000;
    double h = parallel_chunk_sum(n, 1 << 14, harmonic_chunk, 3);
    // H(1e6) to 15 digits.
    CHECK(h == doctest::Approx(14.392726722865724).epsilon(1e-14));
}

TEST_CASE("chunk boundaries ignore partial final chunk correctly") {
    // n not a multiple of the chunk size: last chunk is short.
    const std::int64_t n = (1 << 14) + 37;
    auto fn = [](std::int64_t b, std::int64_t e) {
        return static_cast<double>(e - b);
    };
    CHECK(parallel_chunk_sum(n, 1 << 12, fn, 4) == static_cast<double>(n));
}

TEST_CASE("parallel_for covers every index exactly once") {
    const std::int64_t n = 50000;
    std::vector<std::atomic<int>> hits(n);
    for (auto& h : hits) h.store(0);
    parallel_for(n, [&](std::int64_t i) { hits[static_cast<std::size_t>(i)]++; }, 4);
    for (std::int64_t i = 0; i < n; ++i) {
        REQUIRE(hits[static_cast<std::size_t>(i)].load() == 1);
    }
}

TEST_CASE("default thread count is positive and settable") {
    int saved = default_threads();
    CHECK(saved >= 1);
    set_default_threads(3);
    CHECK(default_threads() == 3);
    set_default_threads(saved);
    CHECK(default_threads() == saved);
}

TEST_CASE("zero-length range sums to zero") {
    auto fn = [](std::int64_t, std::int64_t) { return 1.0; };
    CHECK(parallel_chunk_sum(0, 1 << 10, fn, 2) == 0.0);
}

}  // TEST_SUITE
