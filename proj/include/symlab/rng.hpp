#pragma once

#include <cstdint>

#include "symlab/linalg.hpp"

namespace symlab {

// SplitMix64. Small, seedable, and cheap to re-seed per index, which is what
// the parallel sampling kernels need: draw k from rng_at(seed, i) and the
// result is independent of thread count and iteration order.
struct SplitMix64 {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1).
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    Vec uniform_vec(int n, double lo, double hi) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = uniform(lo, hi);
        return v;
    }
};

inline SplitMix64 rng_at(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 r{seed ^ (0x632be59bd9b4e019ull * (index + 1))};
    r.next();
    r.next();
    return r;
}

}  // namespace symlab
