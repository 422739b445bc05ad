// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_PARALLEL_HPP
#define CYRES_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyres {

// Worker count for the parallel kernels.  1 selects the serial reference
// path.  Results are required to be bit-identical for any worker count:
// every parallel loop writes to disjoint, pre-indexed slots and no
// reductions are parallelized.
void set_workers(int n);
int workers();

// Parallel map over [0, n).  fn(i) must be pure w.r.t. shared state except
// its own output slot.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  if (workers() > 1) {
#pragma omp parallel for schedule(static) num_threads(workers())
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace cyres

#endif
