#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qci {

/// Ordered parallel map: fn(i) runs for i in [0, n), results collected by
/// index so the outcome is independent of the thread count.
template <typename Fn>
void parallelFor(size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t width = std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(width);
    std::atomic<size_t> next{0};
    for (size_t t = 0; t < width; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

/// Parallelism width: QCI_THREADS when set, otherwise the given default.
int threadWidth(int fallback = 1);

}  // namespace qci
