#pragma once

#include <cstdint>
#include <functional>

namespace zexp {

// Worker count used when a call passes threads = 0. Defaults to the hardware
// concurrency; the CLI overrides it via --threads.
int default_threads();
void set_default_threads(int n);

// Deterministic parallel reduction. Work is split into fixed chunks whose
// boundaries depend only on n and chunk_size (never on the thread count);
// chunk_fn(b, e) must accumulate its half-open range in index order and
// return the partial sum. Partials are combined compensated, in chunk order,
// so the result is bit-identical for every thread count, including 1.
double parallel_chunk_sum(std::int64_t n, std::int64_t chunk_size,
                          const std::function<double(std::int64_t, std::int64_t)>& chunk_fn,
                          int threads = 0);

// Runs fn(i) for i in [0, n) on the pool. Tasks must write to disjoint state.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                  int threads = 0);

}  // namespace zexp
