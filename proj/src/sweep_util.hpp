#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "hcn/report.hpp"

namespace hcn::detail {

// Splits [lo, hi] into contiguous chunks, runs fn(chunk_lo, chunk_hi, part)
// on each (parallel when workers > 1), and merges the partial reports in
// chunk order, so the result is independent of the worker count.
inline VerificationReport sweep_ranges(
    std::int64_t lo, std::int64_t hi, int workers,
    const std::function<void(std::int64_t, std::int64_t, VerificationReport&)>& fn) {
    VerificationReport total;
    if (hi < lo) return total;
    if (workers < 1) workers = 1;
    std::int64_t span = hi - lo + 1;
    int chunks = (std::int64_t)workers > span ? (int)span : workers;
    if (chunks <= 1) {
        fn(lo, hi, total);
        return total;
    }
    std::vector<VerificationReport> parts((std::size_t)chunks);
    std::vector<std::thread> pool;
    for (int i = 0; i < chunks; ++i) {
        std::int64_t a = lo + span * i / chunks;
        std::int64_t b = lo + span * (i + 1) / chunks - 1;
        pool.emplace_back([&fn, &parts, i, a, b] { fn(a, b, parts[(std::size_t)i]); });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : parts) total.merge(part);
    return total;
}

}  // namespace hcn::detail
