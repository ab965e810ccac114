#pragma once

#include <cstddef>
#include <functional>

namespace strandtrace {

/// Worker cap: STRAND_TRACE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(0..count-1) on up to `workers` threads. Callers write results into
/// per-index slots, so output never depends on scheduling. The first exception
/// thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace strandtrace
