#pragma once

#include <cstdint>
#include <functional>

namespace coalign {

// Worker count from COALIGN_THREADS, else hardware concurrency, >= 1.
int worker_count();

// Runs fn(i) for i in [0, n), split across workers.  Callers must write
// results into slots indexed by i so aggregates do not depend on
// scheduling; the first worker exception (lowest worker index) rethrows.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace coalign
