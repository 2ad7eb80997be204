#pragma once

#include <cstdint>
#include <functional>

namespace howe {

/// Worker count: HOWE_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Indices are handed
/// out dynamically, so body must not depend on which thread runs it.
void parallel_for(std::uint64_t n, unsigned workers,
                  const std::function<void(std::uint64_t)>& body);

/// Sum of chunk(begin, end) over a fixed partition of [0, n). The partition
/// depends only on n, so the result is identical for any thread count.
std::int64_t parallel_sum(std::uint64_t n, unsigned workers,
                          const std::function<std::int64_t(std::uint64_t, std::uint64_t)>& chunk);

}  // namespace howe
