#pragma once

// Data-parallel execution of independent cells. Every parallel kernel has a
// serial reference path with identical output; results are written into
// per-index slots so the thread count never changes them.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modhom {

enum class Execution { Serial, Parallel };

/// Worker count: MODHOM_THREADS if set to a positive integer, otherwise the
/// hardware parallelism reported by the runtime.
int worker_count();

/// Overrides MODHOM_THREADS for the current process (0 restores the default).
void set_worker_count(int n);

/// out[i] = f(i) for i in [0, n). Exceptions thrown by f are rethrown on the
/// calling thread (the first by index).
template <typename T, typename F>
std::vector<T> map_indices(std::size_t n, F&& f, Execution exec = Execution::Parallel) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    if (exec == Execution::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long i = 0; i < count; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace modhom
