#pragma once

#include <cstddef>
#include <functional>

namespace simcount {

// Number of ranges parallel_ranges will use: min(max(workers,1), total),
// and 0 when total is 0.
std::size_t parallel_range_count(std::size_t total, int workers);

// Splits [0, total) into parallel_range_count contiguous ranges and runs
// fn(range_index, begin, end) for each, on its own thread when workers > 1.
// Range boundaries are a function of (total, workers) only. Callers must
// combine per-range results with an order-insensitive reduction (sums, set
// membership), which keeps every output byte-identical for any worker count.
// A worker exception is rethrown on the calling thread (first range wins).
void parallel_ranges(std::size_t total, int workers,
                     const std::function<void(std::size_t, std::size_t,
                                              std::size_t)>& fn);

}  // namespace simcount
