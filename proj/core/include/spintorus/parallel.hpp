#pragma once

#include <cstddef>
#include <functional>

namespace spintorus {

// Worker count: SPINTORUS_THREADS if set and positive, otherwise the
// hardware concurrency (at least 1).
[[nodiscard]] int worker_count();

// Runs body(i) for i in [0, count). Each index is handled by exactly one
// worker and results are expected to be written to slot i, so the outcome
// does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, int threads = 0);

}  // namespace spintorus
