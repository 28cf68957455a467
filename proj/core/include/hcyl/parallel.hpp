#pragma once

#include <cstddef>
#include <functional>

namespace hcyl {

/// Worker count: SOLVER_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Calls body(i) for i in [0, n) on up to `threads` workers (0 = default_thread_count()).
/// Indices are handed out dynamically; results must be written to per-index slots.
/// The first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace hcyl
