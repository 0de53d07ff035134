#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace itnorm::grid {

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Applies fn(i) for i in [0, count).  The parallel path distributes the
// indices over OpenMP threads; the serial path is the reference used by the
// tests.  fn must not throw (wrap and report) and must only write to
// per-index slots so that both paths produce identical results.
template <class Fn>
void run_indexed(std::size_t count, bool parallel, Fn&& fn) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (long long i = 0; i < static_cast<long long>(count); ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

// Deterministic parallel map: results land in input order.
template <class R, class Fn>
std::vector<R> map_indexed(std::size_t count, bool parallel, Fn&& fn) {
  std::vector<R> out(count);
  run_indexed(count, parallel, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace itnorm::grid
