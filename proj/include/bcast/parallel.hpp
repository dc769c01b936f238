#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bcast {

/// Runs body(i) for every i in [0, count) on up to `jobs` threads. Work is
/// handed out through a shared counter; callers write results into
/// preallocated slots indexed by i, so output order never depends on
/// scheduling. jobs <= 0 means one thread per hardware core.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
    if (jobs <= 0) {
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1, std::memory_order_relaxed); i < count;
                 i = next.fetch_add(1, std::memory_order_relaxed)) {
                body(i);
            }
        });
    }
}

}  // namespace bcast
