#include "modhom/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace modhom {

namespace {
std::atomic<int> override_threads{0};
}

int worker_count() {
    if (int n = override_threads.load(); n > 0) return n;
    if (const char* env = std::getenv("MODHOM_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
        }
    }
#ifdef _OPENMP
    return omp_get_num_procs();
#else
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
#endif
}

void set_worker_count(int n) { override_threads.store(n < 0 ? 0 : n); }

}  // namespace modhom
