// Acceptance gate: one line per criterion, exit code = number of failures.
#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "k3cliff/certificate.hpp"

using namespace k3cliff;
using k3test::rand_int;

namespace {

int failures = 0;

void report(int index, const std::string& title, bool pass, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index, title.c_str(),
                note.empty() ? "" : " — ", note.c_str());
    if (!pass) ++failures;
}

// 1. The closed-form (-2)-classification agrees with brute-force search of
//    the defining equation on the full base-regime grid.
bool criterion1() {
    for (Int s = -3; s <= 25; ++s)
        for (Int g = 2 * s + 13; g <= 2 * s + 80; ++g) {
            if (!regime_failures(g, s, Regime::Base).empty()) continue;
            auto p = new_params(g, s, Regime::Base);
            if (minus_two_bruteforce(p, std::max<Int>(1, p.d - 6)) != minus_two_closed_form(p))
                return false;
        }
    return true;
}

// 2. The isotropic classification lists exactly the primitive isotropic
//    classes of positive degree, verified by direct window scan.
bool criterion2() {
    for (Int s = -1; s <= 25; ++s)
        for (Int g = 2 * s + 13; g <= 2 * s + 80; ++g) {
            if (!regime_failures(g, s, Regime::Base).empty()) continue;
            auto p = new_params(g, s, Regime::Base);
            std::set<std::pair<Int, Int>> scanned;
            for (Int m = -60; m <= 60; ++m)
                for (Int n = -60; n <= 60; ++n) {
                    if ((m == 0 && n == 0) || std::gcd(m, n) != 1) continue;
                    if (self_int(p, {m, n}) != 0) continue;
                    if (intersect(p, {m, n}, kHyperplane) <= 0) continue;
                    scanned.insert({m, n});
                }
            std::set<std::pair<Int, Int>> listed;
            for (const auto& rec : isotropic_primitive(p)) listed.insert({rec.cls.m, rec.cls.n});
            if (scanned != listed) return false;
        }
    return true;
}

// 3. Fixed components are excluded everywhere: the pencil argument closes
//    every grid point, exactly three exceptional points survive the filter,
//    and their box checks land on the expected contradictions.
bool criterion3() {
    GridRange grid{-1, 25, 13, 80};
    for (Int s = grid.s_lo; s <= grid.s_hi; ++s)
        for (Int g = 2 * s + grid.g_rel_lo; g <= 2 * s + grid.g_rel_hi; ++g) {
            if (!regime_failures(g, s, Regime::Base).empty()) continue;
            auto p = new_params(g, s, Regime::Base);
            auto pencil = check_pencil_c_minus_h(p);
            if (pencil.contradiction != Contradiction::NoCandidateF &&
                pencil.contradiction != Contradiction::MdotCNonpositive)
                return false;
            auto decomp = no_isotropic_decomposition(p);
            if (decomp.contradiction != Contradiction::NoCandidateF &&
                decomp.contradiction != Contradiction::CFdotCNonpositive)
                return false;
        }
    auto triples = exceptional_triples(grid);
    if (triples.size() != 3) return false;
    const std::vector<std::pair<std::pair<Int, Int>, Contradiction>> expected = {
        {{12, -1}, Contradiction::BoxEmpty},
        {{15, 1}, Contradiction::BoxEmpty},
        {{20, 3}, Contradiction::OnlyTwoH}};
    for (size_t i = 0; i < 3; ++i) {
        if (triples[i].g != expected[i].first.first) return false;
        if (triples[i].s != expected[i].first.second) return false;
        if (exceptional_box_check(triples[i]).contradiction != expected[i].second) return false;
    }
    return true;
}

// 4. The main bound holds on the full theorem-regime grid: every admissible
//    pencil has f >= floor((g-1)/2), and the rank-2 invariant sits strictly
//    below the maximal Clifford index.
bool criterion4() {
    for (Int s = -1; s <= 30; ++s)
        for (Int g = 2 * s + 14; g <= 2 * s + 100; ++g) {
            auto cert = verify_theorem31(new_params(g, s, Regime::Theorem));
            if (!cert.theorem_holds || !cert.gamma_below_cliff_max) return false;
        }
    return true;
}

// 5. Sharpness at g = 2s+13: the minimum drops to exactly floor((g-1)/2) - 1
//    and is attained by the pencil (m,n) = (-1,1), for every s in [-1, 30].
bool criterion5(std::string& note) {
    for (Int s = -1; s <= 30; ++s) {
        Int g = 2 * s + 13;
        auto cert = clifford_certificate(new_params(g, s, Regime::Base));
        if (!cert.admissible_min) return false;
        if (cert.admissible_min->f != cert.cliff_max - 1) return false;
        bool has = false;
        for (auto c : cert.admissible_min->argmin)
            if (c.m == -1 && c.n == 1) has = true;
        if (!has) {
            note = "at s = " + std::to_string(s) + " the class (-1,1) violates the degree "
                   "constraint (value s-1 > 0) and the minimum " +
                   std::to_string(cert.admissible_min->f) + " is attained by (1,0) instead";
            return false;
        }
    }
    return true;
}

// 6. Ampleness of H certifies on the base grid, and the rank-2 witnesses
//    exist for every genus >= 12 (gamma in [6,40] both genera), with the
//    gamma = 5 pair resting on the documented external case at genus 11.
bool criterion6() {
    for (Int s = -1; s <= 25; ++s)
        for (Int g = std::max<Int>(12, 2 * s + 13); g <= 2 * s + 80; ++g) {
            if (!regime_failures(g, s, Regime::Base).empty()) continue;
            auto cert = ample_certificate(new_params(g, s, Regime::Base), 60);
            if (!cert.verdict || cert.counterexample) return false;
        }
    for (Int gamma = 6; gamma <= 40; ++gamma) {
        auto ws = witness_for_gamma(gamma);
        if (ws.size() != 2) return false;
        for (const auto& w : ws) {
            if (!w.certificate) return false;
            if (w.certificate->cliff_max != gamma) return false;
            if (!w.certificate->cliff2_equal || !w.certificate->theorem_holds) return false;
        }
    }
    auto ws5 = witness_for_gamma(5);
    if (ws5.size() != 2 || !ws5[0].external_result || ws5[0].params) return false;
    if (!ws5[1].certificate || !ws5[1].certificate->cliff2_equal) return false;
    return true;
}

// 7. Arithmetic soundness: pairing identities, the f identity, and the
//    enumeration-bound completeness hold under randomized testing.
bool criterion7() {
    for (int i = 0; i < 100000; ++i) {
        Int g = rand_int(-100, 300), s = rand_int(-60, 60);
        SurfaceParams p = raw_params(g, s);
        DivisorClass d1{rand_int(-40, 40), rand_int(-40, 40)};
        DivisorClass d2{rand_int(-40, 40), rand_int(-40, 40)};
        if (intersect(p, d1, d2) != intersect(p, d2, d1)) return false;
        if (self_int(p, d1) % 2 != 0) return false;
        if (discriminant(p) != g * g - (2 * s + 12) * g + s * s + 12) return false;
        if (f_value(p, d1.m, d1.n) !=
            intersect(p, d1, kCurve) - self_int(p, d1) - 2)
            return false;
    }
    for (int i = 0; i < 200; ++i) {
        auto p = k3test::random_base_params(-3, 12, 13, 40);
        auto b = enumeration_bounds(p);
        for (Int n = 2 * b.n_lo - 5; n <= 2 * b.n_hi + 5; ++n) {
            auto [m_lo, m_hi] = b.m_range(n);
            for (Int m = m_lo - 8; m <= m_hi + 8; ++m) {
                auto c = admissible(p, m, n);
                if (!(c[0] && c[1] && c[2])) continue;
                if (n < b.n_lo || n > b.n_hi || m < m_lo || m > m_hi) return false;
            }
        }
    }
    return true;
}

// 8. Certificates are deterministic and serialization round-trips exactly,
//    across the theorem-regime grid.
bool criterion8() {
    CertifyOptions opts;
    opts.regime = Regime::Theorem;
    opts.with_timestamp = false;
    for (Int s = -1; s <= 30; ++s)
        for (Int g = 2 * s + 14; g <= 2 * s + 100; g += 7) {
            auto doc = build_certificate(g, s, opts);
            std::string bytes = to_json(doc).dump();
            if (to_json(build_certificate(g, s, opts)).dump() != bytes) return false;
            if (to_json(document_from_json(to_json(doc))).dump() != bytes) return false;
            if (!doc.checks.overall) return false;
        }
    return true;
}

}  // namespace

int main() {
    try {
        report(1, "(-2)-class classification matches brute force", criterion1());
        report(2, "isotropic classification matches direct scan", criterion2());
        report(3, "fixed components excluded; three exceptional points boxed out",
               criterion3());
        report(4, "pencil bound holds on the full theorem grid", criterion4());
        std::string note;
        report(5, "sharpness at g = 2s+13 attained by (-1,1) for all s in [-1,30]",
               criterion5(note), note);
        report(6, "ampleness certified and rank-2 witnesses exist", criterion6());
        report(7, "randomized arithmetic and bound-completeness checks", criterion7());
        report(8, "certificates deterministic and round-trip exactly", criterion8());
    } catch (const std::exception& e) {
        std::printf("[FAIL] unexpected exception: %s\n", e.what());
        ++failures;
    }
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures;
}
