#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mcde {

/// 0 means "all hardware threads"; the result is always at least 1.
inline unsigned resolve_threads(unsigned requested) noexcept {
    if (requested == 0) requested = std::thread::hardware_concurrency();
    return std::max(1u, requested);
}

/// Calls fn(i, worker) for every i in [0, count) on up to `threads` workers.
/// Work items are handed out dynamically; callers that need reproducible
/// results must make fn(i, ...) independent of `worker` and of ordering.
/// The first exception thrown by any call is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    const auto workers =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&](unsigned worker) {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i, worker);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body, w);
        body(0);
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace mcde
