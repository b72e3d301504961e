#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace disccount {

/// Sum of body(i) for i in [lo, hi], split into contiguous chunks across
/// `threads` workers. Integer addition makes the result independent of the
/// partitioning.
template <class Body>
std::uint64_t parallel_sum(std::int64_t lo, std::int64_t hi, unsigned threads, Body &&body) {
    if (hi < lo) return 0;
    const std::int64_t total = hi - lo + 1;
    const auto workers = static_cast<std::int64_t>(std::clamp<std::int64_t>(threads, 1, total));

    if (workers == 1) {
        std::uint64_t s = 0;
        for (std::int64_t i = lo; i <= hi; ++i) s += body(i);
        return s;
    }

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t begin = lo + total * w / workers;
        const std::int64_t end = lo + total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                std::uint64_t s = 0;
                for (std::int64_t i = begin; i < end; ++i) s += body(i);
                partial[w] = s;
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) t.join();
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);

    std::uint64_t s = 0;
    for (auto p : partial) s += p;
    return s;
}

} // namespace disccount
