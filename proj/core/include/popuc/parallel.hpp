#pragma once

#include <cstddef>
#include <functional>

namespace popuc {

/// Worker count: hardware concurrency, capped by POPUC_LAB_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Results must
/// be written to per-index slots; if several bodies throw, the exception of
/// the lowest index is rethrown so failures are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace popuc
