#ifndef AHYM_PARALLEL_HPP
#define AHYM_PARALLEL_HPP

// Keep Eigen's own threading off; all parallelism is explicit loops below,
// with per-iteration disjoint writes so results are bit-reproducible.
#ifndef EIGEN_DONT_PARALLELIZE
#define EIGEN_DONT_PARALLELIZE
#endif

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ahym {

enum class Exec { Serial, Parallel };

template <typename Fn>
void parallel_for(long n, Exec mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)mode;
#endif
  for (long i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace ahym

#endif
