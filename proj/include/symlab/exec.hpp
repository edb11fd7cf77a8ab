#pragma once

#include <cstdint>
#include <vector>

namespace symlab::exec {

// Thread budget for the data-parallel kernels. 0 or 1 means serial.
// Results are bit-identical for any setting: parallel loops only fill
// per-index slots of a buffer and every reduction happens afterwards in a
// fixed pairwise order.
void set_threads(int k);
int threads();

// Fixed-order pairwise (tree) summation. Deterministic for a given buffer.
double pairwise_sum(const double* x, std::int64_t count);

namespace detail {
void run_indexed(std::int64_t count, void* ctx, void (*fn)(void*, std::int64_t));
void run_indexed_serial(std::int64_t count, void* ctx, void (*fn)(void*, std::int64_t));
}  // namespace detail

// Evaluate fn(i) for i in [0, count) with the configured thread budget.
// fn must be safe to call concurrently for distinct i.
template <class F>
void parallel_for(std::int64_t count, F&& fn) {
    detail::run_indexed(count, &fn, [](void* ctx, std::int64_t i) {
        (*static_cast<F*>(ctx))(i);
    });
}

// Serial reference used by tests and the benchmark.
template <class F>
void serial_for(std::int64_t count, F&& fn) {
    detail::run_indexed_serial(count, &fn, [](void* ctx, std::int64_t i) {
        (*static_cast<F*>(ctx))(i);
    });
}

// sum_i fn(i), buffered then tree-reduced.
template <class F>
double map_sum(std::int64_t count, F&& fn) {
    std::vector<double> buf(static_cast<std::size_t>(count));
    parallel_for(count, [&](std::int64_t i) { buf[static_cast<std::size_t>(i)] = fn(i); });
    return pairwise_sum(buf.data(), count);
}

template <class F>
double map_sum_serial(std::int64_t count, F&& fn) {
    std::vector<double> buf(static_cast<std::size_t>(count));
    serial_for(count, [&](std::int64_t i) { buf[static_cast<std::size_t>(i)] = fn(i); });
    return pairwise_sum(buf.data(), count);
}

}  // namespace symlab::exec
