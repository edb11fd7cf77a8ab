#include "symlab/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symlab::exec {

namespace {
int g_threads =
#ifdef _OPENMP
    0;  // 0 = use omp default
#else
    1;
#endif
}  // namespace

void set_threads(int k) { g_threads = k; }

int threads() {
#ifdef _OPENMP
    return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

double pairwise_sum(const double* x, std::int64_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::int64_t i = 0; i < count; ++i) s += x[i];
        return s;
    }
    const std::int64_t half = count / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, count - half);
}

namespace detail {

void run_indexed_serial(std::int64_t count, void* ctx, void (*fn)(void*, std::int64_t)) {
    for (std::int64_t i = 0; i < count; ++i) fn(ctx, i);
}

void run_indexed(std::int64_t count, void* ctx, void (*fn)(void*, std::int64_t)) {
#ifdef _OPENMP
    const int nt = threads();
    if (nt > 1 && count > 64) {
#pragma omp parallel for schedule(static) num_threads(nt)
        for (std::int64_t i = 0; i < count; ++i) fn(ctx, i);
        return;
    }
#endif
    run_indexed_serial(count, ctx, fn);
}

}  // namespace detail

}  // namespace symlab::exec
