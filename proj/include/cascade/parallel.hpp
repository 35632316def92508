#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cascade {

/// Runs fn(i) for every i in [0, n). Each index must write only its own
/// output slot; results are then bitwise independent of n_threads.
inline void parallel_for(std::size_t n, unsigned n_threads,
                         const std::function<void(std::size_t)>& fn) {
    if (n_threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(n_threads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, w, workers, n] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace cascade
