#include <algorithm>
#include <set>
#include <doctest.h>

#include "helpers.hpp"
#include "k3cliff/clifford.hpp"

using namespace k3cliff;
using k3test::rand_int;

TEST_CASE("f on pinned examples") {
    auto p = new_params(14, 0, Regime::Base);
    CHECK(f_value(p, -1, 1) == 6);
    CHECK(f_value(p, 1, 0) == 6);
    CHECK(f_value(p, 0, 0) == -2);
}

TEST_CASE("f equals D.C - D^2 - 2") {
    for (int i = 0; i < 20000; ++i) {
        auto p = k3test::random_base_params();
        Int m = rand_int(-30, 30), n = rand_int(-30, 30);
        DivisorClass d{m, n};
        REQUIRE(f_value(p, m, n) ==
                intersect(p, d, kCurve) - self_int(p, d) - 2);
    }
}

TEST_CASE("admissibility constraints on pinned examples") {
    auto p = new_params(14, 0, Regime::Base);
    CHECK(admissible(p, -1, 1) == std::array<bool, 3>{true, true, true});
    // (1,0) has positive degree on C: third constraint fails.
    CHECK(admissible(p, 1, 0) == std::array<bool, 3>{true, true, false});
    // (0,0) is not big: first constraint fails.
    CHECK(admissible(p, 0, 0)[0] == false);
}

TEST_CASE("first constraint is exactly D^2 > 0") {
    for (int i = 0; i < 20000; ++i) {
        auto p = k3test::random_base_params();
        Int m = rand_int(-30, 30), n = rand_int(-30, 30);
        REQUIRE(admissible(p, m, n)[0] == (self_int(p, {m, n}) > 0));
    }
}

TEST_CASE("enumeration bounds on a pinned example") {
    auto b = enumeration_bounds(new_params(14, 0, Regime::Base));
    CHECK(b.n_lo == 0);
    CHECK(b.n_hi == 2);
    CHECK(b.m_range(1) == std::pair<Int, Int>{-1, -1});
}

TEST_CASE("enumeration bounds are complete") {
    // Scanning a strictly larger window finds no admissible point outside
    // the proven bounds.
    for (int i = 0; i < 200; ++i) {
        auto p = k3test::random_base_params(-3, 12, 13, 40);
        auto b = enumeration_bounds(p);
        for (Int n = 2 * b.n_lo - 5; n <= 2 * b.n_hi + 5; ++n) {
            auto [m_lo, m_hi] = b.m_range(n);
            for (Int m = m_lo - 8; m <= m_hi + 8; ++m) {
                auto c = admissible(p, m, n);
                if (!(c[0] && c[1] && c[2])) continue;
                REQUIRE(n >= b.n_lo);
                REQUIRE(n <= b.n_hi);
                REQUIRE(m >= m_lo);
                REQUIRE(m <= m_hi);
            }
        }
    }
}

TEST_CASE("minimum of f on pinned examples") {
    auto min = min_clifford_pencil(new_params(14, 0, Regime::Base));
    REQUIRE(min.has_value());
    CHECK(*min == Minimum{6, {{-1, 1}}});

    min = min_clifford_pencil(new_params(13, 0, Regime::Base));
    REQUIRE(min.has_value());
    CHECK(*min == Minimum{5, {{-1, 1}}});

    min = min_clifford_pencil(new_params(12, -1, Regime::Base));
    REQUIRE(min.has_value());
    CHECK(*min == Minimum{5, {{-1, 1}}});
}

TEST_CASE("theorem certificate on pinned examples") {
    auto cert = clifford_certificate(new_params(14, 0, Regime::Base));
    CHECK(cert.cliff_max == 6);
    CHECK(cert.theorem_holds);
    CHECK(cert.gamma_rank2 == Rational(5));
    CHECK(cert.mercat_lower == Rational(5));
    CHECK(cert.cliff2_equal);
    CHECK(cert.gamma_below_cliff_max);

    cert = clifford_certificate(new_params(13, 0, Regime::Base));
    CHECK(cert.cliff_max == 6);
    CHECK(!cert.theorem_holds);  // min f = 5 < 6 one step below the bound
}

TEST_CASE("verify_theorem31 enforces its regime") {
    CHECK(verify_theorem31(new_params(14, 0, Regime::Theorem)).theorem_holds);
    CHECK(verify_theorem31(new_params(30, 8, Regime::Theorem)).theorem_holds);
    CHECK_THROWS_AS(verify_theorem31(new_params(13, 0, Regime::Base)),
                    RegimeViolation);
}

TEST_CASE("the theorem holds across the full grid") {
    for (Int s = -1; s <= 30; ++s) {
        for (Int g = 2 * s + 14; g <= 2 * s + 100; ++g) {
            auto cert = verify_theorem31(new_params(g, s, Regime::Theorem));
            REQUIRE(cert.theorem_holds);
            REQUIRE(cert.cliff2_equal == (g == 2 * s + 14 || g == 2 * s + 15));
        }
    }
}

TEST_CASE("sharpness at g = 2s+13: the bound fails by exactly one") {
    for (Int s = -1; s <= 30; ++s) {
        Int g = 2 * s + 13;
        auto p = new_params(g, s, Regime::Base);
        auto cert = clifford_certificate(p);
        REQUIRE(cert.admissible_min.has_value());
        REQUIRE(cert.admissible_min->f == p.d - 8);
        REQUIRE(cert.admissible_min->f == cert.cliff_max - 1);
        REQUIRE(!cert.theorem_holds);
        // The argmin is always one of the two distinguished pencils.
        std::set<std::pair<Int, Int>> argmin;
        for (auto c : cert.admissible_min->argmin) argmin.insert({c.m, c.n});
        for (auto [m, n] : argmin)
            REQUIRE(((m == 1 && n == 0) || (m == -1 && n == 1)));
        if (s <= 1) REQUIRE(argmin.count({-1, 1}) == 1);
        if (s >= 1) REQUIRE(argmin.count({1, 0}) == 1);
    }
}

TEST_CASE("gamma_of_bundle on pinned examples") {
    CHECK(gamma_of_bundle(2, 14, 4) == Rational(5));
    CHECK(gamma_of_bundle(1, 0, 1) == Rational(0));
    CHECK(gamma_of_bundle(2, 15, 4) == Rational(11, 2));
    CHECK_THROWS_AS(gamma_of_bundle(0, 5, 2), InvalidRank);
}

TEST_CASE("root bounds certify 1 < b < 2") {
    auto rb = root_bounds(new_params(14, 0, Regime::Theorem));
    CHECK(rb.d == 14);
    CHECK(rb.disc == 40);
    CHECK((rb.d - 12) * (rb.d - 12) < rb.disc);
    CHECK(rb.disc < (rb.d - 6) * (rb.d - 6));

    rb = root_bounds(new_params(16, 1, Regime::Theorem));
    CHECK(rb.d == 15);
    CHECK(rb.disc == 45);

    // The inequality also holds one step outside the theorem regime; the
    // regime is checked on the inputs, not re-derived from the inequality.
    rb = root_bounds(new_params(13, 0, Regime::Base));
    CHECK(rb.d == 13);
    CHECK(rb.disc == 25);
}

TEST_CASE("witnesses for gamma") {
    auto ws = witness_for_gamma(6);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].genus == 13);
    CHECK(ws[1].genus == 14);
    for (const auto& w : ws) {
        REQUIRE(w.params.has_value());
        REQUIRE(w.certificate.has_value());
        CHECK(w.certificate->cliff_max == 6);
        CHECK(w.certificate->cliff2_equal);
        CHECK(!w.external_result);
    }
    CHECK(ws[0].params->s == -1);
    CHECK(ws[1].params->s == 0);

    ws = witness_for_gamma(5);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].genus == 11);
    CHECK(!ws[0].params.has_value());
    CHECK(ws[0].external_result);
    REQUIRE(ws[1].params.has_value());
    CHECK(ws[1].params->g == 12);
    CHECK(ws[1].params->s == -1);
    CHECK(ws[1].certificate->cliff2_equal);

    CHECK_THROWS_AS(witness_for_gamma(4), GammaTooSmall);
}

TEST_CASE("witnesses exist for every gamma up to 40") {
    for (Int gamma = 6; gamma <= 40; ++gamma) {
        for (const auto& w : witness_for_gamma(gamma)) {
            REQUIRE(w.certificate.has_value());
            REQUIRE(w.certificate->cliff_max == gamma);
            REQUIRE(w.certificate->cliff2_equal);
            REQUIRE(w.certificate->theorem_holds);
        }
    }
}
