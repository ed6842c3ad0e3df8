#pragma once

#include <cstddef>
#include <functional>

namespace vmlattice {

/// Runs task(i) for i in [0, count) on up to `jobs` threads. Each index is
/// handled exactly once; the first exception thrown is rethrown here.
void run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

/// std::thread::hardware_concurrency(), at least 1.
unsigned default_jobs();

}  // namespace vmlattice
