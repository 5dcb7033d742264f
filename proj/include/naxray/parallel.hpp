#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace naxray {

// The OpenMP path and the serial path run identical per-item code, so
// results agree bitwise; the serial path is the reference the tests pin
// the parallel one against.
enum class Exec { serial, openmp };

inline int hardware_threads() {
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

template <typename F>
void parallel_for(Exec exec, std::size_t count, F&& body) {
    if (exec == Exec::openmp) {
#ifdef _OPENMP
        // Exceptions may not escape the parallel region; surface the first.
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)count; ++i) {
            try {
                body(std::size_t(i));
            } catch (...) {
#pragma omp critical(naxray_parallel_for_err)
                {
                    if (!err) err = std::current_exception();
                }
            }
        }
        if (err) std::rethrow_exception(err);
        return;
#endif
    }
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace naxray
