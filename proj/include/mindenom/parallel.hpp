#pragma once

#include <cstddef>
#include <functional>

namespace mindenom {

/// Worker count from LAB_THREADS, else the hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for every i in [0, n) on worker_count() threads. Work is split into
/// chunks of indices; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace mindenom
