#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sumcont {

/// Effective worker count: explicit request, else the SUMCONT_THREADS
/// environment variable, else the hardware default.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUMCONT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/**
 * Deterministic map over [0, total): the range is split into contiguous
 * chunks processed in parallel, and the per-chunk partials are returned in
 * chunk order. Results are a pure function of `total` and `fn`, never of
 * the worker count, as long as callers fold the partials in order.
 */
template <class Partial, class Fn>
std::vector<Partial> parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    auto want = static_cast<std::uint64_t>(threads);
    if (want > total) want = total == 0 ? 1 : total;

    std::vector<Partial> partials(static_cast<std::size_t>(want));
    if (want <= 1) {
        partials[0] = fn(std::uint64_t{0}, total);
        return partials;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(want));
    const std::uint64_t chunk = (total + want - 1) / want;
    for (std::uint64_t w = 0; w < want; ++w) {
        std::uint64_t lo = std::min(w * chunk, total);
        std::uint64_t hi = std::min(lo + chunk, total);
        pool.emplace_back([&, w, lo, hi] { partials[static_cast<std::size_t>(w)] = fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
    return partials;
}

} // namespace sumcont
