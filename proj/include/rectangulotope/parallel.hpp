#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rectangulotope {

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls body(i) for i in [0, count) across OpenMP threads. The body must
/// write only to slot i of its outputs. If bodies throw, the exception of the
/// smallest failing index is rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const auto total = static_cast<std::int64_t>(count);
  std::exception_ptr error;
  std::int64_t error_index = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(rectangulotope_parallel_for_error)
      {
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace rectangulotope
