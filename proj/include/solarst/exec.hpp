#ifndef SOLARST_EXEC_HPP
#define SOLARST_EXEC_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solarst {

// Execution policy for the data-parallel kernels. Every parallel kernel has a
// serial twin reached with Exec::serial(); outputs are bitwise identical
// because each index owns its output slot and no reductions cross indices.
struct Exec {
  bool parallel = false;
  int jobs = 0;  // 0 = OpenMP default

  static Exec serial() { return {false, 0}; }
  static Exec openmp(int jobs = 0) { return {true, jobs}; }
};

template <class F>
void for_index(std::size_t n, const Exec& exec, F&& body) {
  if (exec.parallel) {
#ifdef _OPENMP
    if (exec.jobs > 0) {
#pragma omp parallel for schedule(static) num_threads(exec.jobs)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        body(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        body(static_cast<std::size_t>(i));
    }
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Dynamic schedule for uneven work items (per-day fits, CV folds).
template <class F>
void for_task(std::size_t n, const Exec& exec, F&& body) {
  if (exec.parallel) {
#ifdef _OPENMP
    if (exec.jobs > 0) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.jobs)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        body(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        body(static_cast<std::size_t>(i));
    }
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace solarst

#endif
