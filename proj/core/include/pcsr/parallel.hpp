#pragma once

#include <cstddef>
#include <functional>

namespace pcsr {

// Worker count: PCSR_THREADS env var caps it, 0 or unset means auto.
int worker_count();

// Runs fn(i) for i in [0, n). Tasks must write to disjoint locations; the
// partition of indices over threads is fixed, so output is identical
// regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pcsr
