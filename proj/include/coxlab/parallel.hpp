#pragma once

#include <cstddef>
#include <functional>

namespace coxlab {

/// Worker count: COXLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Indices are
/// handed out dynamically; the first exception thrown is rethrown here after
/// all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coxlab
