#pragma once

#include <cstddef>
#include <functional>

namespace tmpfp {

/// Environment variable that pins the worker count.
inline constexpr const char* kWorkersEnv = "TMPFP_WORKERS";

/// Worker count from TMPFP_WORKERS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// runs exactly once; the first exception thrown is rethrown after all
/// workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tmpfp
