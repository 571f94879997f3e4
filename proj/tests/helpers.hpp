#pragma once

#include <random>

#include "k3cliff/lattice.hpp"

namespace k3test {

using namespace k3cliff;

// Deterministic RNG so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 r(0x5eed1234abcdULL);
    return r;
}

inline Int rand_int(Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    return dist(rng());
}

inline SurfaceParams random_base_params(Int s_lo = -3, Int s_hi = 25, Int rel_lo = 13,
                                        Int rel_hi = 80) {
    for (;;) {
        Int s = rand_int(s_lo, s_hi);
        Int g = 2 * s + rand_int(rel_lo, rel_hi);
        if (!regime_failures(g, s, Regime::Base).empty()) continue;
        return new_params(g, s, Regime::Base);
    }
}

inline SurfaceParams random_theorem_params(Int s_lo = -1, Int s_hi = 30, Int rel_lo = 14,
                                           Int rel_hi = 100) {
    for (;;) {
        Int s = rand_int(s_lo, s_hi);
        Int g = 2 * s + rand_int(rel_lo, rel_hi);
        if (!regime_failures(g, s, Regime::Theorem).empty()) continue;
        return new_params(g, s, Regime::Theorem);
    }
}

}  // namespace k3test
