#pragma once

// Thin OpenMP wrapper.  Heavy coefficient kernels and the verification
// driver fan out through for_each; everything degrades to a plain loop
// when OpenMP is absent or parallelism is switched off, which is also the
// serial reference path the tests compare against.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace e8check::par {

bool enabled();
void set_enabled(bool on);

// 0 = leave the OpenMP runtime default alone.
void set_threads(int n);
int threads();

bool compiled_with_openmp();

template <class F>
void for_each(int n, bool heavy, F&& f) {
#ifdef _OPENMP
  if (enabled() && heavy && n > 1 && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) f(i);
}

}  // namespace e8check::par
