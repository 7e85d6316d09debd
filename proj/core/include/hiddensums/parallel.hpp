#pragma once

#include <cstdint>
#include <functional>

namespace hiddensums {

// Worker count: HIDDENSUMS_THREADS when set, hardware concurrency otherwise.
int configured_thread_count();

// Runs fn(begin, end) over contiguous chunks of [0, total); fn must be
// thread-safe across disjoint ranges.
void parallel_ranges(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace hiddensums
