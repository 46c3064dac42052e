#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kt {

// Every parallel kernel in the library has a serial twin selected by this
// policy. The two paths run identical per-cell floating-point code, so their
// outputs are required (and tested) to be bitwise equal; parallelism is only
// ever over independent cells writing disjoint slots.
enum class Exec { serial, parallel };

template <class F>
void for_each_index(std::ptrdiff_t n, Exec exec, F&& f) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
    }
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

} // namespace kt
