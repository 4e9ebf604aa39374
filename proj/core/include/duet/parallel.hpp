#pragma once

#include <cstddef>
#include <functional>

namespace duet {

/// Worker count: DUET_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads in contiguous
/// chunks. Each index is visited exactly once, so writes to distinct output
/// slots give deterministic results. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace duet
