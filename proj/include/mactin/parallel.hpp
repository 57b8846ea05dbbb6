#pragma once

#include <cstddef>
#include <functional>

namespace mactin {

/// Worker count: MACTIN_THREADS when set to a positive integer, otherwise the
/// hardware concurrency. Results never depend on this value.
std::size_t worker_count();

/// Calls `task(i)` for every i in [0, n_tasks) on up to worker_count()
/// threads. Tasks must write to disjoint state; the first exception thrown
/// by any task is rethrown after all workers join.
void parallel_for(std::size_t n_tasks, const std::function<void(std::size_t)>& task);

}  // namespace mactin
