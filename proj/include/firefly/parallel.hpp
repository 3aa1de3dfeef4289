#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace firefly {

/// Splits [0, total) into contiguous chunks, runs `work(chunk_index, begin,
/// end)` on up to `jobs` threads, and returns when all chunks finish.  The
/// chunk decomposition depends only on `total` and `jobs`, so callers that
/// reduce per-chunk results in chunk order get scheduling-independent output.
inline void parallel_chunks(std::uint64_t total, int jobs,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& work) {
    if (total == 0) return;
    int worker_count = std::max(1, jobs);
    if (static_cast<std::uint64_t>(worker_count) > total) {
        worker_count = static_cast<int>(total);
    }
    if (worker_count == 1) {
        work(0, 0, total);
        return;
    }
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(worker_count) - 1) /
                                static_cast<std::uint64_t>(worker_count);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(worker_count));
    for (int i = 0; i < worker_count; ++i) {
        const std::uint64_t begin = static_cast<std::uint64_t>(i) * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&work, i, begin, end] { work(i, begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace firefly
