#pragma once

#include <cstddef>
#include <functional>

namespace sbproj {

// Runs fn(i) for every i in [0, n) across worker threads, each taking a
// contiguous block. Callers must ensure fn writes to disjoint state; results
// may not depend on execution order. Stays serial below min_parallel items,
// so hot loops over tiny workloads never pay the thread-spawn cost.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t min_parallel = 2);

}  // namespace sbproj
