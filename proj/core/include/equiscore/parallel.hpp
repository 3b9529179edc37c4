#pragma once

#include <cstddef>
#include <functional>

namespace equiscore {

// Worker count: EQUISCORE_THREADS if set (>=1), else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n). Tasks must only write to slots owned by their
/// index; results are then independent of scheduling and runs are
/// reproducible. Exceptions from tasks are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace equiscore
