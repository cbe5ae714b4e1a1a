#pragma once

#include <cstddef>
#include <functional>

namespace clark {

// Worker count: hardware concurrency capped by CLARK_SPECTRA_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n). The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace clark
