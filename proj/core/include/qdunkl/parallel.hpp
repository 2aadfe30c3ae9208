#ifndef QDUNKL_PARALLEL_HPP
#define QDUNKL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qdunkl
{

// Thread count to use: `requested` if nonzero, else QDUNKL_THREADS if set to a
// positive integer, else 1.
unsigned resolve_threads(unsigned requested = 0);

// Calls fn(i) for i in [0, count) on up to `threads` threads. Work is handed
// out dynamically, so fn must write its result to slot i only; the output is
// then independent of scheduling. The exception thrown for the smallest index
// is rethrown after all threads finish.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F &&fn)
{
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1U), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) {
        pool.emplace_back(body);
    }
    body();
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace qdunkl

#endif
