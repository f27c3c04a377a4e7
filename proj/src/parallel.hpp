#pragma once

// Static partitioning of an index range over worker threads.  Each worker
// gets a contiguous block; callers reduce per-block results in block order,
// so output never depends on the thread count.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace patternforge::detail {

inline unsigned worker_count()
{
    if (const char *env = std::getenv("PATTERNFORGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Calls fn(block, begin, end) for each block of [0, n).  Returns the number of
/// blocks.  Exceptions from workers are rethrown on the calling thread.
template <typename Fn>
std::size_t parallel_blocks(std::size_t n, Fn &&fn, std::size_t min_block = 16)
{
    std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, n / min_block));
    if (workers <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return 1;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t b = std::min(n, w * chunk), e = std::min(n, b + chunk);
        threads.emplace_back([&, w, b, e] {
            try {
                fn(w, b, e);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads)
        t.join();
    for (auto &err : errors)
        if (err)
            std::rethrow_exception(err);
    return workers;
}

inline std::size_t block_count(std::size_t n, std::size_t min_block = 16)
{
    return std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, n / min_block));
}

}  // namespace patternforge::detail
