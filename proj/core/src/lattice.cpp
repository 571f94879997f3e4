#include "k3cliff/lattice.hpp"

namespace k3cliff {

std::string regime_name(Regime r) {
    return r == Regime::Base ? "base" : "theorem";
}

Regime regime_from_name(const std::string& name) {
    if (name == "base") return Regime::Base;
    if (name == "theorem") return Regime::Theorem;
    throw Error("unknown regime: " + name);
}

std::vector<std::string> regime_failures(Int g, Int s, Regime regime) {
    std::vector<std::string> failed;
    Int d = checked_sub(g, s);
    if (d <= 0) failed.push_back("d > 0");
    if (g < 0) failed.push_back("g >= 0");
    if (g < checked_add(checked_mul(2, s), 13)) failed.push_back("g >= 2s+13");
    if (d == 7 && g == 4) failed.push_back("(d,g) != (7,4)");
    if (regime == Regime::Theorem) {
        if (s < -1) failed.push_back("s >= -1");
        if (g < checked_add(checked_mul(2, s), 14)) failed.push_back("g >= 2s+14");
    }
    return failed;
}

SurfaceParams new_params(Int g, Int s, Regime regime) {
    auto failed = regime_failures(g, s, regime);
    if (!failed.empty()) throw RegimeViolation(std::move(failed));
    return SurfaceParams{g, s, checked_sub(g, s), regime};
}

Int intersect(const SurfaceParams& p, DivisorClass a, DivisorClass b) {
    Int c2 = checked_sub(checked_mul(2, p.g), 2);
    Int mm = checked_mul(6, checked_mul(a.m, b.m));
    Int mixed = checked_mul(p.d, checked_add(checked_mul(a.m, b.n), checked_mul(b.m, a.n)));
    Int nn = checked_mul(c2, checked_mul(a.n, b.n));
    return checked_add(mm, checked_add(mixed, nn));
}

Int self_int(const SurfaceParams& p, DivisorClass d) {
    return intersect(p, d, d);
}

Int chi(const SurfaceParams& p, DivisorClass d) {
    return checked_add(self_int(p, d) / 2, 2);
}

Int discriminant(const SurfaceParams& p) {
    return checked_sub(checked_mul(p.d, p.d), checked_mul(12, checked_sub(p.g, 1)));
}

}  // namespace k3cliff
