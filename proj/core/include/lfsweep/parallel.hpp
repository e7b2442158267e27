#pragma once

#include <functional>

namespace lfsweep {

// Runs fn(i) for every i in [begin, end), split over up to num_threads
// workers. num_threads <= 0 selects the hardware concurrency. Callers
// must write disjoint outputs per index; results are then independent of
// the partitioning.
void parallel_for(int begin, int end, int num_threads, const std::function<void(int)>& fn);

int default_thread_count();

}  // namespace lfsweep
