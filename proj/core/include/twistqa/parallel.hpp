#pragma once

#include <cstddef>
#include <functional>

namespace tqa {

// Worker count used when a caller passes jobs <= 0.
int default_jobs();

// Calls fn(i) for every i in [0, count) on up to `jobs` threads. Results must
// be written to caller-owned slots indexed by i, which keeps reductions
// deterministic regardless of scheduling. The first exception thrown by any
// call is rethrown after all workers have joined.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace tqa
