#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace peterson {

/// Worker count for fan-out sweeps: the PETERSON_JOBS environment
/// variable when set to a positive number, otherwise the hardware
/// concurrency (at least 1).
inline unsigned worker_count() {
    if (const char* env = std::getenv("PETERSON_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0 && v < 1024) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(index, worker) for index in [0, count) across `workers`
/// threads pulling from a shared counter. Worker ids are dense in
/// [0, workers), so callers can keep per-worker scratch state. The first
/// exception thrown by any worker is rethrown after all of them finish.
inline void parallel_for(size_t count, unsigned workers,
                         const std::function<void(size_t, unsigned)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    workers = static_cast<unsigned>(std::min<size_t>(workers, count));
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned wid = 0; wid < workers; ++wid) {
        pool.emplace_back([&, wid] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i, wid);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace peterson
