#pragma once

#include <cstddef>
#include <functional>

namespace cwb {

// Worker count from CONFORMAL_WORKBENCH_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Callers write results into slot i, so merged
// output does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cwb
