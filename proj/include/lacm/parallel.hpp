// Minimal worker-pool helper for the embarrassingly parallel sweeps.
// Worker count comes from LACM_WORKERS (default: hardware concurrency,
// capped at 8).  Callers write results by index, so output ordering is
// deterministic regardless of scheduling.
#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lacm {

inline int worker_count() {
    if (const char* env = std::getenv("LACM_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
}

// Runs fn(i) for i in [0, n) across workers.  fn must be thread-safe in the
// usual sense (distinct i touch distinct output slots).
template <class Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
    const int workers = worker_count();
    if (n <= 0) return;
    if (workers <= 1 || n < 64) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::int64_t chunk = std::max<std::int64_t>(1, n / (workers * 16));
    auto work = [&] {
        try {
            while (true) {
                const std::int64_t begin = next.fetch_add(chunk);
                if (begin >= n) break;
                const std::int64_t end = std::min(begin + chunk, n);
                for (std::int64_t i = begin; i < end; ++i) fn(i);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(n);  // drain remaining work
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace lacm
