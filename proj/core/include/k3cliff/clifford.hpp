#pragma once

#include <array>
#include <optional>
#include <vector>

#include "k3cliff/lattice.hpp"

namespace k3cliff {

// f(m,n) = -6m^2 + (1-2n)dm + (n-n^2)(2g-2) - 2; equals D.C - D^2 - 2.
Int f_value(const SurfaceParams& p, Int m, Int n);

// The three admissibility constraints for D ~ mH + nC:
//   [0]  3m^2 + mnd + n^2(g-1) > 0          (D^2 > 0)
//   [1]  3 <= 6m + nd <= d-3                (3 <= D.H <= d-3)
//   [2]  md + (2n-1)(g-1) <= 0              (deg D|_C <= g-1)
std::array<bool, 3> admissible(const SurfaceParams& p, Int m, Int n);

struct AdmissiblePoint {
    DivisorClass cls;
    Int f{0};
    std::array<bool, 3> constraints{};
};

// Proven-complete enumeration window for the admissible set.
struct EnumerationBounds {
    Int n_lo{0};
    Int n_hi{0};
    Int d{0};

    // m interval for a given n, from 3 <= 6m + nd <= d-3.
    std::pair<Int, Int> m_range(Int n) const {
        return {ceil_div(3 - n * d, 6), floor_div(d - 3 - n * d, 6)};
    }
};

EnumerationBounds enumeration_bounds(const SurfaceParams& p);

// All admissible points inside the proven bounds, in (n, m) order.
std::vector<AdmissiblePoint> admissible_points(const SurfaceParams& p);

struct Minimum {
    Int f{0};
    std::vector<DivisorClass> argmin;  // (n, m)-lexicographic

    friend bool operator==(const Minimum&, const Minimum&) = default;
};

// Minimum of f over the admissible set; nullopt when the set is empty
// (no pencil competes with the maximal Clifford index).
std::optional<Minimum> min_clifford_pencil(const SurfaceParams& p);

struct CliffordCertificate {
    SurfaceParams params;
    Int cliff_max{0};  // floor((g-1)/2)
    std::optional<Minimum> admissible_min;
    bool theorem_holds{false};      // admissible set empty or min f >= cliff_max
    Rational gamma_rank2;           // (g-s)/2 - 2
    Rational mercat_lower;          // cliff_max/2 + 2
    bool cliff2_equal{false};       // gamma_rank2 == mercat_lower
    bool gamma_below_cliff_max{false};  // gamma_rank2 < cliff_max, exact
};

// Works for any Base-regime point (used for sharpness probes too).
CliffordCertificate clifford_certificate(const SurfaceParams& p);

// Same, but demands the Theorem regime (s >= -1, g >= 2s+14).
CliffordCertificate verify_theorem31(const SurfaceParams& p);

// gamma = (degree - 2(h0 - rank)) / rank, exact.
Rational gamma_of_bundle(Int rank, Int degree, Int h0);

// Roots a,b = (d +/- sqrt(disc))/6 of 6x^2 - 2dx + 2g-2 = 0, kept exact as
// the pair (d, disc). In the Theorem regime 1 < b < 2, certified by
// (d-12)^2 < disc < (d-6)^2.
struct RootBounds {
    Int d{0};
    Int disc{0};
};

RootBounds root_bounds(const SurfaceParams& p);

struct GammaWitness {
    Int genus{0};
    std::optional<SurfaceParams> params;
    std::optional<CliffordCertificate> certificate;
    bool external_result{false};  // gamma = 5, g = 11 rests on an external theorem
};

// The two genus witnesses 2*gamma+1 and 2*gamma+2 with s = floor((g-14)/2).
std::vector<GammaWitness> witness_for_gamma(Int gamma);

}  // namespace k3cliff
