#include "k3cliff/fixedcomp.hpp"

#include <algorithm>
#include <cstdlib>

namespace k3cliff {

namespace {

void require_base_s_ge_m1(const SurfaceParams& p, const char* what) {
    if (p.s < -1 || !regime_failures(p.g, p.s, Regime::Base).empty())
        throw PreconditionViolation(std::string(what) + " requires Base regime with s >= -1");
}

// Symbolic value vs pairing value; both routes must agree.
Int cross_checked(Int closed_form, Int pairing, const char* label) {
    if (closed_form != pairing)
        throw InternalInconsistency(std::string("closed form disagrees with pairing for ") +
                                    label);
    return pairing;
}

}  // namespace

std::string exclusion_target_name(ExclusionTarget t) {
    return t == ExclusionTarget::PencilCminusH ? "pencil_c_minus_h" : "general_d";
}

std::string contradiction_name(Contradiction c) {
    switch (c) {
        case Contradiction::NoCandidateF: return "no_candidate_f";
        case Contradiction::MdotCNonpositive: return "m_dot_c_nonpositive";
        case Contradiction::CFdotCNonpositive: return "cf_dot_c_nonpositive";
        case Contradiction::BoxEmpty: return "box_empty";
        case Contradiction::OnlyTwoH: return "only_two_h";
    }
    throw Error("bad Contradiction");
}

ExclusionReport check_pencil_c_minus_h(const SurfaceParams& p) {
    require_base_s_ge_m1(p, "check_pencil_c_minus_h");

    ExclusionReport rep;
    rep.params = p;
    rep.target = ExclusionTarget::PencilCminusH;

    Int pencil_sq = cross_checked(2 * p.s + 4, self_int(p, {-1, 1}), "(C-H)^2");
    rep.detail.emplace_back("(C-H)^2", pencil_sq);
    if (pencil_sq < 2)
        throw InternalInconsistency("(C-H)^2 < 2 with s >= -1");

    // A fixed component of |C-H| needs F.H <= d-9, which only the
    // F ~ ((s+5)/2)H - C case can reach.
    std::optional<MinusTwoRecord> candidate;
    for (const auto& rec : minus_two_closed_form(p))
        if (rec.r <= p.d - 9) candidate = rec;
    if (!candidate) {
        rep.contradiction = Contradiction::NoCandidateF;
        return rep;
    }
    rep.candidate = candidate;
    rep.detail.emplace_back("F.H", candidate->r);

    // M = (C-H) - F = 2C - ((s+7)/2)H.
    DivisorClass moving{-1 - candidate->cls.m, 1 - candidate->cls.n};
    Int m_dot_c = cross_checked(-(3 * p.s * p.s + 6 * p.s - 9) / 4,
                                intersect(p, moving, kCurve), "M.C");
    rep.detail.emplace_back("M.C", m_dot_c);
    if (m_dot_c > 0)
        throw InternalInconsistency("M.C > 0: pencil exclusion failed in regime");
    rep.contradiction = Contradiction::MdotCNonpositive;
    return rep;
}

std::optional<ExceptionalFilter> exceptional_filter(const SurfaceParams& p) {
    std::optional<MinusTwoRecord> f;
    Int closed_form = 0;
    if (p.s >= -1 && p.g == 4 * p.s + 16) {
        f = MinusTwoRecord{{p.s + 4, -1}, p.d - 8, MinusTwoCase::SPlus4HMinusC};
        closed_form = -(3 * p.s * p.s + 12 * p.s + 4);
    } else if (p.s >= 1 && p.s % 2 != 0 && 2 * p.g == 5 * (p.s + 5)) {
        f = MinusTwoRecord{{(p.s + 5) / 2, -1}, p.d - 10, MinusTwoCase::HalfSPlus5HMinusC};
        closed_form = -(3 * p.s * p.s - 59) / 4;
    }
    if (!f) return std::nullopt;

    DivisorClass c_minus_f{-f->cls.m, 1 - f->cls.n};
    Int cf_dot_c = cross_checked(closed_form, intersect(p, c_minus_f, kCurve), "(C-F).C");
    return ExceptionalFilter{p, *f, cf_dot_c, cf_dot_c > 0};
}

std::vector<SurfaceParams> exceptional_triples(const GridRange& grid) {
    std::vector<SurfaceParams> out;
    for (Int s = grid.s_lo; s <= grid.s_hi; ++s) {
        for (Int g = 2 * s + grid.g_rel_lo; g <= 2 * s + grid.g_rel_hi; ++g) {
            if (s < -1 || !regime_failures(g, s, Regime::Base).empty()) continue;
            SurfaceParams p = new_params(g, s, Regime::Base);
            auto filter = exceptional_filter(p);
            if (filter && filter->survives) out.push_back(p);
        }
    }
    return out;
}

ExclusionReport exceptional_box_check(const SurfaceParams& p, Int widen) {
    auto filter = exceptional_filter(p);
    if (!filter || !filter->survives)
        throw PreconditionViolation("exceptional_box_check: point is not exceptional");

    const MinusTwoRecord& f = filter->candidate;
    Int f_dot_c = intersect(p, f.cls, kCurve);
    Int c_sq = 2 * p.g - 2;

    // Write C-D ~ mH + nC; the two pairings give the box
    //   lo1 <= 6m + dn <= hi1,  lo2 <= dm + (2g-2)n <= hi2.
    Int lo1 = f.r + 3, hi1 = p.d - 3;
    Int lo2 = f_dot_c + 1, hi2 = c_sq - 1;

    ExclusionReport rep;
    rep.params = p;
    rep.target = ExclusionTarget::GeneralD;
    rep.candidate = f;
    rep.detail.emplace_back("(C-D).H lower", lo1);
    rep.detail.emplace_back("(C-D).H upper", hi1);
    rep.detail.emplace_back("(C-D).C lower", lo2);
    rep.detail.emplace_back("(C-D).C upper", hi2);

    // The Gram matrix is nondegenerate, so the box is a bounded
    // parallelogram; Cramer bounds give a finite (m,n) search region.
    Int disc = discriminant(p);
    Int max1 = std::max(std::llabs(lo1), std::llabs(hi1));
    Int max2 = std::max(std::llabs(lo2), std::llabs(hi2));
    Int bound_m = (c_sq * max1 + p.d * max2) / disc + 1;
    Int bound_n = (6 * max2 + p.d * max1) / disc + 1;
    bound_m *= widen;
    bound_n *= widen;

    std::vector<DivisorClass> solutions;
    for (Int m = -bound_m; m <= bound_m; ++m) {
        for (Int n = -bound_n; n <= bound_n; ++n) {
            Int l1 = 6 * m + p.d * n;
            Int l2 = p.d * m + c_sq * n;
            if (l1 >= lo1 && l1 <= hi1 && l2 >= lo2 && l2 <= hi2)
                solutions.push_back({m, n});
        }
    }
    rep.detail.emplace_back("solutions", static_cast<Int>(solutions.size()));

    if (solutions.empty()) {
        rep.contradiction = Contradiction::BoxEmpty;
    } else if (solutions.size() == 1 && solutions[0] == DivisorClass{2, 0}) {
        rep.contradiction = Contradiction::OnlyTwoH;
    } else {
        throw InternalInconsistency("box check found an unexpected solution set");
    }
    return rep;
}

ExclusionReport no_isotropic_decomposition(const SurfaceParams& p) {
    require_base_s_ge_m1(p, "no_isotropic_decomposition");

    ExclusionReport rep;
    rep.params = p;
    rep.target = ExclusionTarget::GeneralD;

    auto isotropic = isotropic_primitive(p);
    if (isotropic.empty()) {
        rep.contradiction = Contradiction::NoCandidateF;
        return rep;
    }
    for (const auto& rec : isotropic) {
        // C.(C-2E) = C^2 - 2 E.C, evaluated both ways.
        DivisorClass c_minus_2e{-2 * rec.cls.m, 1 - 2 * rec.cls.n};
        Int direct = intersect(p, kCurve, c_minus_2e);
        Int via_pairing =
            checked_sub(2 * p.g - 2, checked_mul(2, intersect(p, rec.cls, kCurve)));
        cross_checked(via_pairing, direct, "C.(C-2E)");
        rep.detail.emplace_back("C.(C-2E) for E=(" + std::to_string(rec.cls.m) + "," +
                                    std::to_string(rec.cls.n) + ")",
                                direct);
        if (direct >= 0)
            throw InternalInconsistency("C.(C-2E) >= 0: isotropic decomposition not excluded");
    }
    rep.contradiction = Contradiction::CFdotCNonpositive;
    return rep;
}

}  // namespace k3cliff
