#ifndef ROTOMODE_PARALLEL_HPP
#define ROTOMODE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace rotomode {

// Worker count: hardware concurrency, capped by the ROTOMODE_THREADS
// environment variable when set.
std::size_t worker_count();

// Runs fn(begin, end) over a partition of [0, n). Each range is disjoint, so
// per-slot writes are deterministic regardless of thread count.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace rotomode

#endif  // ROTOMODE_PARALLEL_HPP
