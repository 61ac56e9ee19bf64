#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sqf {

inline int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, n). Each index is processed exactly once; the
// caller owns any per-index result slots, so reductions stay in index order
// and results do not depend on the partitioning. The first exception thrown
// by any body is rethrown on the calling thread.
inline void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& body) {
    threads = resolve_threads(threads);
    if (n <= 0)
        return;
    if (threads <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                next.store(n); // drain remaining work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = static_cast<int>(std::min<std::int64_t>(threads, n));
    pool.reserve(static_cast<size_t>(count) - 1);
    for (int t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace sqf
