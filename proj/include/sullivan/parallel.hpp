#pragma once

#include <cstddef>
#include <functional>

namespace sullivan {

// Worker count: SULLIVAN_LAB_THREADS if set to a positive integer, otherwise
// the hardware concurrency.
unsigned default_threads();

// Runs body(i) for i in [0, n) on up to `threads` workers. The
// exception from the lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads);

}  // namespace sullivan
