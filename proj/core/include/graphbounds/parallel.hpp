#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace graphbounds {

// Worker cap: GRAPHBOUNDS_THREADS when set (clamped to >= 1), otherwise
// std::thread::hardware_concurrency(). Read once per call site, so tests can
// flip the environment variable between calls.
int thread_count();

// Runs f(begin, end) over a static partition of [0, count) across up to
// thread_count() workers. Callers must write only to per-index slots; results
// are then identical for every thread count.
template <typename F>
void parallel_chunks(std::size_t count, F&& f) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
    if (workers <= 1) {
        f(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t begin = count * t / workers;
        const std::size_t end = count * (t + 1) / workers;
        pool.emplace_back([&f, begin, end] { f(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace graphbounds
