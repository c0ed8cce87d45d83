#pragma once

// Internal helper: ordered-claim parallel loop. Not installed.

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace adim::detail {

// Runs fn(i) for i in [0, count). Indices are claimed in ascending order
// from a shared counter; when stop (optional) becomes true, indices not
// yet claimed are skipped. The first exception thrown by any worker is
// rethrown on the calling thread after all workers join.
template <typename Fn>
void parallel_for_ordered(int count, int workers, std::atomic<bool>* stop, Fn&& fn) {
    if (count <= 0) return;
    workers = std::max(1, std::min(workers, count));

    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            if (stop && stop->load(std::memory_order_relaxed)) break;
            fn(i);
        }
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&]() {
        for (;;) {
            if (stop && stop->load(std::memory_order_relaxed)) return;
            int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                if (stop) stop->store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace adim::detail
