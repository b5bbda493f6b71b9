#ifndef QTORIC_PARALLEL_HPP
#define QTORIC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef QTORIC_HAVE_OPENMP
#include <omp.h>
#endif

namespace qtoric {

enum class Execution { serial, parallel };

// Runs body(i) for i in [0, n). Iterations must be independent. The first
// exception thrown by any iteration is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
}

inline int max_threads() {
#ifdef QTORIC_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace qtoric

#endif
