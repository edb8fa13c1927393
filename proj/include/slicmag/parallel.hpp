#pragma once

#include <functional>

namespace slicmag {

/// Worker count derived from SLICMAG_THREADS (0 or unset = hardware concurrency).
int worker_count();

/// Runs fn(begin..end) split across workers; fn must be safe on disjoint ranges.
void parallel_for(int begin, int end, const std::function<void(int, int)>& fn);

}  // namespace slicmag
