#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cube {

/// Runs fn(begin, end) over disjoint chunks of [0, count) on `jobs` threads
/// (jobs <= 0 means hardware concurrency). fn must be safe to call
/// concurrently on disjoint ranges.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    const std::size_t workers = std::min<std::size_t>(jobs, count ? count : 1);
    if (workers <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([=] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace cube
