#pragma once

#include <cstddef>
#include <functional>

namespace ears {

// Worker count from EARS_THREADS (default: hardware concurrency, at least 1).
unsigned thread_count();

// Calls f(i) for i in [0, n), split into contiguous blocks across threads.
// Callers write results into per-index slots so output order never depends on
// the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

} // namespace ears
