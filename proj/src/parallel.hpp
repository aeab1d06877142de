#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hq::detail {

inline unsigned worker_count(unsigned requested, std::uint64_t work) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(work, 1)));
}

/// Runs fn(i, out) for i in [0, count) split into contiguous blocks, one per
/// worker, and concatenates the per-block outputs in index order. The result
/// does not depend on the number of workers.
template <class T, class Fn>
std::vector<T> parallel_collect(std::uint64_t count, unsigned threads, Fn fn) {
    const unsigned workers = worker_count(threads, count);
    std::vector<std::vector<T>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            const std::uint64_t lo = count * w / workers;
            const std::uint64_t hi = count * (w + 1) / workers;
            for (std::uint64_t i = lo; i < hi; ++i) fn(i, parts[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::size_t total = 0;
    for (auto& p : parts) total += p.size();
    std::vector<T> out;
    out.reserve(total);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace hq::detail
