#ifndef GSP4_PARALLEL_HPP
#define GSP4_PARALLEL_HPP

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gsp4 {

/// Worker count: min(GSP4_THREADS if set, OpenMP max threads); 1 without OpenMP.
int worker_count();

enum class Exec { serial, parallel };

/// Index loop. The parallel path is a plain OpenMP for; the serial path is the
/// reference implementation the tests compare against.
template <class F>
void for_each_index(std::size_t n, F&& f, Exec mode = Exec::parallel) {
#if defined(_OPENMP)
  if (mode == Exec::parallel && worker_count() > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long long i = 0; i < (long long)n; ++i) f(std::size_t(i));
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

/// Deterministic map-reduce: per-index results land in a buffer, then are
/// summed in index order, so parallel == serial bit-for-bit.
template <class T, class F>
T ordered_sum(std::size_t n, F&& f, Exec mode = Exec::parallel) {
  std::vector<T> buf(n);
  for_each_index(n, [&](std::size_t i) { buf[i] = f(i); }, mode);
  T acc{};
  for (std::size_t i = 0; i < n; ++i) acc += buf[i];
  return acc;
}

} // namespace gsp4

#endif
