#pragma once

#include <cstddef>
#include <functional>

namespace grt2 {

// Worker count: GRT2_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Calls task(i) for every i in [0, n) on up to thread_count() threads. Tasks
// must not share mutable state; callers store results by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace grt2
