#include "zexp/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "zexp/numeric.hpp"

namespace zexp {

namespace {
std::atomic<int> g_threads{0};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    int configured = g_threads.load();
    if (configured > 0) return configured;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Pulls chunk indices from a shared counter; the first exception wins and is
// rethrown on the caller thread after all workers join.
template <typename Body>
void run_pool(std::int64_t n_tasks, int threads, Body&& body) {
    if (n_tasks <= 0) return;
    if (threads > n_tasks) threads = static_cast<int>(n_tasks);
    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n_tasks) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
}
}  // namespace

int default_threads() { return resolve_threads(0); }

void set_default_threads(int n) { g_threads.store(n > 0 ? n : 0); }

double parallel_chunk_sum(std::int64_t n, std::int64_t chunk_size,
                          const std::function<double(std::int64_t, std::int64_t)>& chunk_fn,
                          int threads) {
    if (n <= 0) return 0.0;
    if (chunk_size <= 0) chunk_size = 1 << 16;
    std::int64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<double> partial(n_chunks, 0.0);
    run_pool(n_chunks, resolve_threads(threads), [&](std::int64_t c) {
        std::int64_t b = c * chunk_size;
        std::int64_t e = std::min(n, b + chunk_size);
        partial[c] = chunk_fn(b, e);
    });
    KahanSum total;
    for (double p : partial) total.add(p);
    return total.value();
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                  int threads) {
    run_pool(n, resolve_threads(threads), fn);
}

}  // namespace zexp
