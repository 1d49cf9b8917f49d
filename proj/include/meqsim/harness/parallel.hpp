#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace meqsim::harness {

// Runs fn(0..count-1) on a small worker pool and collects the results in
// index order. Work items must not depend on execution order; per-trial rng
// streams keep them independent.
template <typename Result>
std::vector<Result> ordered_parallel_map(int count,
                                         const std::function<Result(int)>& fn) {
    std::vector<Result> results(static_cast<std::size_t>(count));
    unsigned workers = std::thread::hardware_concurrency();
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) {
            results[static_cast<std::size_t>(i)] = fn(i);
        }
        return results;
    }
    if (workers > static_cast<unsigned>(count)) {
        workers = static_cast<unsigned>(count);
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                results[static_cast<std::size_t>(i)] = fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

} // namespace meqsim::harness
