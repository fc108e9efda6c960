#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>

namespace overpart {

/// Sets the OpenMP worker count; values below 1 are ignored.
void set_worker_count(int workers);
int worker_count();

/// Applies OVERPART_THREADS from the environment when set to a positive integer.
void apply_worker_env();

/// Runs body(i) for i in [0, n) across OpenMP threads with dynamic scheduling.
/// The first exception thrown by any iteration is rethrown after the loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace overpart
