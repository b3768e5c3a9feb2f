#ifndef HYPERMIM_PARALLEL_H_
#define HYPERMIM_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace hypermim {

// Worker count: HYPERMIM_THREADS when set and positive, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_budget();

// Runs body(0..n-1) on up to `threads` workers (0 means thread_budget()).
// The first exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body, std::size_t threads = 0);

}  // namespace hypermim

#endif  // HYPERMIM_PARALLEL_H_
