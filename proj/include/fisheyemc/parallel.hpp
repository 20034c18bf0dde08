#pragma once

#include <functional>

namespace fmc {

/// Runs fn(i) for i in [0, count) split into static contiguous chunks, one
/// per worker. Results must go to disjoint locations; chunking is fixed by
/// (count, num_threads) so any reduction done afterwards in index order is
/// deterministic. num_threads <= 0 selects the hardware concurrency.
void parallel_for(int count, const std::function<void(int)>& fn, int num_threads = 0);

}  // namespace fmc
