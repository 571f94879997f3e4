#include "k3cliff/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace k3cliff {

namespace {

bool lex_by_r_n_m(const MinusTwoRecord& a, const MinusTwoRecord& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.cls.n != b.cls.n) return a.cls.n < b.cls.n;
    return a.cls.m < b.cls.m;
}

// Match a (-2)-class against the case analysis. Classes below d-5 that fit
// no enumerable case would contradict the classification.
MinusTwoCase classify_minus_two(const SurfaceParams& p, DivisorClass f, Int r) {
    if (r >= p.d - 5) return MinusTwoCase::GenericHighDegree;
    if (p.s == -3 && f == DivisorClass{-1, 1}) return MinusTwoCase::CMinusH;
    if (p.s == -3 && p.g % 3 == 0 && f == DivisorClass{p.g / 3, -1})
        return MinusTwoCase::GThirdHMinusC;
    if (p.s >= -1 && p.g == 4 * p.s + 16 && f == DivisorClass{p.s + 4, -1})
        return MinusTwoCase::SPlus4HMinusC;
    if (p.s >= 1 && p.s % 2 != 0 && 2 * p.g == 5 * (p.s + 5) &&
        f == DivisorClass{(p.s + 5) / 2, -1})
        return MinusTwoCase::HalfSPlus5HMinusC;
    throw ClassificationMismatch("(-2)-class (" + std::to_string(f.m) + "," +
                                 std::to_string(f.n) + ") with F.H=" + std::to_string(r) +
                                 " matches no case at g=" + std::to_string(p.g) +
                                 ", s=" + std::to_string(p.s));
}

MinusTwoRecord make_checked_record(const SurfaceParams& p, DivisorClass f, MinusTwoCase tag) {
    Int sq = self_int(p, f);
    Int r = intersect(p, f, kHyperplane);
    Int disc = discriminant(p);
    if (sq != -2 ||
        checked_mul(f.n, checked_mul(f.n, disc)) != checked_add(checked_mul(r, r), 12))
        throw InternalInconsistency("closed-form (-2)-class fails its defining identities");
    return MinusTwoRecord{f, r, tag};
}

}  // namespace

std::string minus_two_case_name(MinusTwoCase c) {
    switch (c) {
        case MinusTwoCase::GenericHighDegree: return "generic_high_degree";
        case MinusTwoCase::CMinusH: return "c_minus_h";
        case MinusTwoCase::GThirdHMinusC: return "g_third_h_minus_c";
        case MinusTwoCase::SPlus4HMinusC: return "s_plus_4_h_minus_c";
        case MinusTwoCase::HalfSPlus5HMinusC: return "half_s_plus_5_h_minus_c";
    }
    throw Error("bad MinusTwoCase");
}

std::vector<MinusTwoRecord> minus_two_bruteforce(const SurfaceParams& p, Int r_max) {
    if (r_max < 1) throw PreconditionViolation("r_max must be >= 1");
    Int disc = discriminant(p);
    if (disc <= 0) throw DegenerateDiscriminant(disc);

    // n^2 disc = r^2 + 12 bounds the search; n = 0 would force 3m^2 = -1.
    Int n_sq_max = (checked_add(checked_mul(r_max, r_max), 12)) / disc;
    Int n_max = 0;
    while (checked_mul(n_max + 1, n_max + 1) <= n_sq_max) ++n_max;

    std::vector<MinusTwoRecord> out;
    for (Int n = -n_max; n <= n_max; ++n) {
        if (n == 0) continue;
        Int r_sq = checked_sub(checked_mul(n, checked_mul(n, disc)), 12);
        if (r_sq < 1) continue;
        auto r = perfect_square_root(r_sq);
        if (!r || *r < 1 || *r > r_max) continue;
        Int num = checked_sub(*r, checked_mul(p.d, n));
        if (num % 6 != 0) continue;
        DivisorClass f{num / 6, n};
        if (self_int(p, f) != -2)
            throw InternalInconsistency("brute-force candidate fails F^2 = -2");
        out.push_back(MinusTwoRecord{f, *r, classify_minus_two(p, f, *r)});
    }
    std::sort(out.begin(), out.end(), lex_by_r_n_m);
    return out;
}

std::vector<MinusTwoRecord> minus_two_closed_form(const SurfaceParams& p) {
    std::vector<MinusTwoRecord> out;
    if (p.s == -3) {
        out.push_back(make_checked_record(p, {-1, 1}, MinusTwoCase::CMinusH));
        if (p.g % 3 == 0)
            out.push_back(make_checked_record(p, {p.g / 3, -1}, MinusTwoCase::GThirdHMinusC));
    }
    if (p.s >= -1 && p.g == 4 * p.s + 16)
        out.push_back(make_checked_record(p, {p.s + 4, -1}, MinusTwoCase::SPlus4HMinusC));
    if (p.s >= 1 && p.s % 2 != 0 && 2 * p.g == 5 * (p.s + 5))
        out.push_back(
            make_checked_record(p, {(p.s + 5) / 2, -1}, MinusTwoCase::HalfSPlus5HMinusC));
    std::sort(out.begin(), out.end(), lex_by_r_n_m);
    return out;
}

std::string isotropic_case_name(IsotropicCase c) {
    switch (c) {
        case IsotropicCase::SPlus3HMinusC: return "s_plus_3_h_minus_c";
        case IsotropicCase::ThreeCMinus4H: return "three_c_minus_4h";
        case IsotropicCase::HalfSPlus4HMinusC: return "half_s_plus_4_h_minus_c";
        case IsotropicCase::ThreeCMinus5H: return "three_c_minus_5h";
    }
    throw Error("bad IsotropicCase");
}

std::vector<IsotropicRecord> isotropic_primitive(const SurfaceParams& p) {
    if (p.s < -1) throw PreconditionViolation("isotropic_primitive requires s >= -1");
    Int disc = discriminant(p);
    auto t = perfect_square_root(disc);
    if (!t) return {};

    // E^2 = 0 as a quadratic in m/n has roots (-d +/- t)/6; each rational
    // root reduces to one primitive class, oriented by E.H > 0.
    std::vector<IsotropicRecord> out;
    for (Int root_num : {checked_add(-p.d, *t), checked_sub(-p.d, *t)}) {
        Int num = root_num, den = 6;
        Int g = std::gcd(num, den);
        if (g == 0) g = 1;
        num /= g;
        den /= g;
        DivisorClass e{num, den};
        if (intersect(p, e, kHyperplane) <= 0) e = DivisorClass{-e.m, -e.n};
        if (self_int(p, e) != 0 || std::gcd(e.m, e.n) != 1 ||
            intersect(p, e, kHyperplane) <= 0)
            throw InternalInconsistency("isotropic root produced an invalid class");

        IsotropicCase tag;
        if (p.s >= 0 && p.g == 4 * p.s + 13 && e == DivisorClass{p.s + 3, -1})
            tag = IsotropicCase::SPlus3HMinusC;
        else if (p.s >= 0 && p.g == 4 * p.s + 13 && e == DivisorClass{-4, 3})
            tag = IsotropicCase::ThreeCMinus4H;
        else if (p.s >= 4 && p.s % 2 == 0 && 2 * p.g == 5 * p.s + 22 &&
                 e == DivisorClass{(p.s + 4) / 2, -1})
            tag = IsotropicCase::HalfSPlus4HMinusC;
        else if (p.s >= 4 && p.s % 2 == 0 && 2 * p.g == 5 * p.s + 22 &&
                 e == DivisorClass{-5, 3})
            tag = IsotropicCase::ThreeCMinus5H;
        else
            throw ClassificationMismatch("primitive isotropic class (" + std::to_string(e.m) +
                                         "," + std::to_string(e.n) + ") matches no case at g=" +
                                         std::to_string(p.g) + ", s=" + std::to_string(p.s));
        out.push_back(IsotropicRecord{e, tag, *t});
    }
    std::sort(out.begin(), out.end(), [&](const IsotropicRecord& a, const IsotropicRecord& b) {
        Int ha = intersect(p, a.cls, kHyperplane);
        Int hb = intersect(p, b.cls, kHyperplane);
        if (ha != hb) return ha < hb;
        if (a.cls.n != b.cls.n) return a.cls.n < b.cls.n;
        return a.cls.m < b.cls.m;
    });
    return out;
}

AmpleCertificate ample_certificate(const SurfaceParams& p, Int window) {
    if (p.g < 2 || checked_add(p.g, p.s) <= 2)
        throw PreconditionViolation("ample_certificate requires g >= 2 and g+s > 2");
    if (window < 1) throw PreconditionViolation("window must be >= 1");

    AmpleCertificate cert;
    cert.params = p;
    cert.falsifier_window = window;

    // Quadrant m>0, n<0: C.D > -(n/6)(g(g-2s-12)+s^2+12).
    Int q1 = checked_add(
        checked_mul(p.g, checked_sub(p.g, checked_add(checked_mul(2, p.s), 12))),
        checked_add(checked_mul(p.s, p.s), 12));
    cert.analytic_cases.push_back(
        {"m>0,n<0", "g(g-2s-12)+s^2+12 > 0", q1, q1 > 0});

    // Quadrant m<0, n>0, m <= -3: n C.D >= -m - 2 >= 1, parameter-free.
    cert.analytic_cases.push_back({"m<=-3,n>0", "-m-2 >= 1 for m <= -3", 1, true});

    // m = -1, or m = -2 with n >= 2: C.D >= g+s-2.
    Int q3 = checked_sub(checked_add(p.g, p.s), 2);
    cert.analytic_cases.push_back({"m=-1 or (m=-2,n>=2)",
                                   "g+s-2 > 0", q3, q3 > 0});

    // (m,n) = (-2,1): D^2 = 4s-2g+22 must avoid -2 (i.e. g != 2s+12).
    Int q4 = checked_add(checked_sub(checked_mul(4, p.s), checked_mul(2, p.g)), 22);
    cert.analytic_cases.push_back({"(m,n)=(-2,1)", "4s-2g+22 != -2", q4, q4 != -2});

    bool analytic_ok = true;
    for (const auto& c : cert.analytic_cases) analytic_ok = analytic_ok && c.pass;

    // Candidate irreducible proxy: D.H > 0 and D^2 >= -2 (a superset of
    // actual irreducible curve classes, so a clean scan is conservative).
    for (Int m = -window; m <= window && !cert.counterexample; ++m) {
        for (Int n = -window; n <= window; ++n) {
            if (m == 0 && n == 0) continue;
            DivisorClass dcl{m, n};
            if (intersect(p, dcl, kHyperplane) <= 0) continue;
            if (self_int(p, dcl) < -2) continue;
            if (intersect(p, kCurve, dcl) <= 0) {
                cert.counterexample = dcl;
                break;
            }
        }
    }
    cert.verdict = analytic_ok && !cert.counterexample;
    return cert;
}

}  // namespace k3cliff
