#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace npr {

/// Resolve a thread-count request: 0 means "use hardware concurrency".
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(block_index, begin, end) over [0, n) split into fixed-size blocks.
///
/// The block decomposition depends only on (n, block_size), never on the
/// thread count, so any reduction that combines per-block results in block
/// order is bitwise reproducible for every thread count.
inline void parallel_blocks(size_t n, size_t block_size, int threads,
                            const std::function<void(size_t, size_t, size_t)>& fn) {
    if (n == 0) return;
    const size_t nblocks = (n + block_size - 1) / block_size;
    threads = resolve_threads(threads);
    if (threads == 1 || nblocks == 1) {
        for (size_t b = 0; b < nblocks; ++b)
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= nblocks) return;
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        }
    };
    std::vector<std::thread> pool;
    const int nw = static_cast<int>(std::min<size_t>(static_cast<size_t>(threads), nblocks));
    pool.reserve(static_cast<size_t>(nw));
    for (int t = 1; t < nw; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace npr
