#include "k3cliff/clifford.hpp"

#include <algorithm>

namespace k3cliff {

Int f_value(const SurfaceParams& p, Int m, Int n) {
    Int quad = checked_mul(-6, checked_mul(m, m));
    Int lin = checked_mul(checked_sub(1, checked_mul(2, n)), checked_mul(p.d, m));
    Int ncoef = checked_sub(n, checked_mul(n, n));
    Int ns = checked_mul(ncoef, checked_sub(checked_mul(2, p.g), 2));
    return checked_sub(checked_add(quad, checked_add(lin, ns)), 2);
}

std::array<bool, 3> admissible(const SurfaceParams& p, Int m, Int n) {
    Int g1 = checked_sub(p.g, 1);
    Int positivity = checked_add(checked_mul(3, checked_mul(m, m)),
                                 checked_add(checked_mul(m, checked_mul(n, p.d)),
                                             checked_mul(checked_mul(n, n), g1)));
    Int dh = checked_add(checked_mul(6, m), checked_mul(n, p.d));
    Int degree = checked_add(checked_mul(m, p.d),
                             checked_mul(checked_sub(checked_mul(2, n), 1), g1));
    return {positivity > 0, dh >= 3 && dh <= p.d - 3, degree <= 0};
}

EnumerationBounds enumeration_bounds(const SurfaceParams& p) {
    Int disc = discriminant(p);
    if (disc <= 0) throw DegenerateDiscriminant(disc);

    // n < 0 needs |n| disc <= 6(g-1) - 3d (combine the degree bound with
    // d * the lower D.H bound).
    Int slack = std::max<Int>(0, 6 * (p.g - 1) - 3 * p.d);
    Int n_lo = -(slack / disc);

    // n > 0 needs n sqrt(disc) < d-3; take the least k with k^2 disc >= (d-3)^2.
    Int target = checked_mul(p.d - 3, p.d - 3);
    Int n_hi = 0;
    while (checked_mul(checked_mul(n_hi, n_hi), disc) < target) ++n_hi;

    return EnumerationBounds{n_lo, n_hi, p.d};
}

std::vector<AdmissiblePoint> admissible_points(const SurfaceParams& p) {
    auto bounds = enumeration_bounds(p);
    std::vector<AdmissiblePoint> out;
    for (Int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
        auto [m_lo, m_hi] = bounds.m_range(n);
        for (Int m = m_lo; m <= m_hi; ++m) {
            auto c = admissible(p, m, n);
            if (c[0] && c[1] && c[2])
                out.push_back(AdmissiblePoint{{m, n}, f_value(p, m, n), c});
        }
    }
    return out;
}

std::optional<Minimum> min_clifford_pencil(const SurfaceParams& p) {
    std::optional<Minimum> best;
    for (const auto& pt : admissible_points(p)) {
        if (!best || pt.f < best->f) {
            best = Minimum{pt.f, {pt.cls}};
        } else if (pt.f == best->f) {
            best->argmin.push_back(pt.cls);
        }
    }
    if (best)
        std::sort(best->argmin.begin(), best->argmin.end(),
                  [](DivisorClass a, DivisorClass b) {
                      return a.n != b.n ? a.n < b.n : a.m < b.m;
                  });
    return best;
}

CliffordCertificate clifford_certificate(const SurfaceParams& p) {
    CliffordCertificate cert;
    cert.params = p;
    cert.cliff_max = floor_div(p.g - 1, 2);
    cert.admissible_min = min_clifford_pencil(p);
    cert.theorem_holds = !cert.admissible_min || cert.admissible_min->f >= cert.cliff_max;
    cert.gamma_rank2 = Rational(p.g - p.s - 4, 2);
    cert.mercat_lower = Rational(cert.cliff_max + 4, 2);
    cert.cliff2_equal = cert.gamma_rank2 == cert.mercat_lower;
    cert.gamma_below_cliff_max = cert.gamma_rank2 < Rational(cert.cliff_max);
    return cert;
}

CliffordCertificate verify_theorem31(const SurfaceParams& p) {
    auto failed = regime_failures(p.g, p.s, Regime::Theorem);
    if (!failed.empty()) throw RegimeViolation(std::move(failed));
    return clifford_certificate(p);
}

Rational gamma_of_bundle(Int rank, Int degree, Int h0) {
    if (rank < 1) throw InvalidRank(rank);
    return Rational(checked_sub(degree, checked_mul(2, checked_sub(h0, rank))), rank);
}

RootBounds root_bounds(const SurfaceParams& p) {
    Int disc = discriminant(p);
    Int lower = checked_mul(p.d - 12, p.d - 12);
    Int upper = checked_mul(p.d - 6, p.d - 6);
    if (!(lower < disc && disc < upper))
        throw BoundViolation("root bound (d-12)^2 < disc < (d-6)^2 fails: " +
                             std::to_string(lower) + ", " + std::to_string(disc) + ", " +
                             std::to_string(upper));
    if (checked_sub(checked_mul(p.d, p.d), disc) != checked_mul(12, p.g - 1))
        throw InternalInconsistency("root product identity d^2 - disc = 12(g-1) fails");
    return RootBounds{p.d, disc};
}

std::vector<GammaWitness> witness_for_gamma(Int gamma) {
    if (gamma < 5) throw GammaTooSmall(gamma);

    std::vector<GammaWitness> out;
    for (Int g : {2 * gamma + 1, 2 * gamma + 2}) {
        GammaWitness w;
        w.genus = g;
        Int s = floor_div(g - 14, 2);
        if (!regime_failures(g, s, Regime::Theorem).empty()) {
            // gamma = 5, g = 11: outside the verified regime, the statement
            // rests on an external result.
            w.external_result = true;
            out.push_back(w);
            continue;
        }
        SurfaceParams p = new_params(g, s, Regime::Theorem);
        CliffordCertificate cert = verify_theorem31(p);
        if (cert.cliff_max != gamma)
            throw InternalInconsistency("witness genus does not realize cliff_max = gamma");
        if (!cert.cliff2_equal)
            throw InternalInconsistency("witness does not attain the Mercat lower bound");
        w.params = p;
        w.certificate = cert;
        out.push_back(w);
    }
    return out;
}

}  // namespace k3cliff
