#pragma once

// OpenMP helpers shared by the parallel kernels. Exceptions thrown inside a
// parallel region are captured and the first one is rethrown on the caller's
// thread after the region ends.

#include <cstdint>
#include <exception>
#include <mutex>

#include <omp.h>

namespace cwsphere::detail {

template <typename Fn>
void parallel_for(std::int64_t count, Fn&& fn) {
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace cwsphere::detail
