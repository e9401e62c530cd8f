#pragma once

#include <functional>

namespace hessplus {

// Worker count: HESSPLUS_THREADS if set (minimum 1), else hardware
// concurrency capped at 8.
int max_threads();

// Runs fn(i) for i in [begin, end) on contiguous index chunks.  Callers must
// write only to slots owned by their index, so results are identical to the
// serial order regardless of the worker count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace hessplus
