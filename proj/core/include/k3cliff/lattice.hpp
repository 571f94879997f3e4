#pragma once

#include <compare>
#include <string>
#include <vector>

#include "k3cliff/arith.hpp"

namespace k3cliff {

// Parameter regime for the surface data (g, s, d = g - s).
//
//   Base:    d > 0, g >= 0, g >= 2s+13, (d,g) != (7,4)
//   Theorem: s >= -1 and g >= 2s+14 (implies Base)
enum class Regime { Base, Theorem };

std::string regime_name(Regime r);
Regime regime_from_name(const std::string& name);

// Divisor class D ~ mH + nC in Pic(S) = ZH + ZC.
struct DivisorClass {
    Int m{0};
    Int n{0};

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    auto operator<=>(const DivisorClass&) const = default;
};

inline constexpr DivisorClass kHyperplane{1, 0};
inline constexpr DivisorClass kCurve{0, 1};

// The rank-2 lattice is fully determined by (g, s); d is carried redundantly
// so the Gram matrix ((6, d), (d, 2g-2)) is explicit.
struct SurfaceParams {
    Int g{0};
    Int s{0};
    Int d{0};
    Regime regime{Regime::Base};

    friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

// Every regime condition that fails for (g, s); empty means valid.
std::vector<std::string> regime_failures(Int g, Int s, Regime regime);

// Validating constructor; throws RegimeViolation listing all failed conditions.
SurfaceParams new_params(Int g, Int s, Regime regime);

// Unvalidated construction, for probing parameters outside both regimes.
inline SurfaceParams raw_params(Int g, Int s) {
    return SurfaceParams{g, s, checked_sub(g, s), Regime::Base};
}

// Intersection pairing: 6 m1 m2 + d (m1 n2 + m2 n1) + (2g-2) n1 n2.
Int intersect(const SurfaceParams& p, DivisorClass a, DivisorClass b);

// D.D; always even (the lattice is even).
Int self_int(const SurfaceParams& p, DivisorClass d);

// Euler characteristic D^2/2 + 2, defined for every class.
Int chi(const SurfaceParams& p, DivisorClass d);

// d^2 - 12(g-1); positive whenever the Base regime holds.
Int discriminant(const SurfaceParams& p);

}  // namespace k3cliff
