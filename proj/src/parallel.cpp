#include "fdacov/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdacov {
namespace threads {

namespace {
std::atomic<int> g_override{0};

int hardware_max() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int env_limit() {
    const char* v = std::getenv("FDACOV_THREADS");
    if (!v) return 0;
    const int n = std::atoi(v);
    return n > 0 ? n : 0;
}
} // namespace

int effective() {
    const int ov = g_override.load(std::memory_order_relaxed);
    int n = hardware_max();
    if (const int e = env_limit(); e > 0 && e < n) n = e;
    if (ov > 0 && ov < n) n = ov;
    return n > 0 ? n : 1;
}

void set_override(int n) { g_override.store(n, std::memory_order_relaxed); }

} // namespace threads

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
    if (n <= 0) return;
#ifdef _OPENMP
    const int nt = threads::effective();
    if (nt > 1 && !omp_in_parallel() && n > 1) {
#pragma omp parallel for schedule(static) num_threads(nt)
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

} // namespace fdacov
