#include <algorithm>
#include <doctest.h>

#include "helpers.hpp"
#include "k3cliff/lattice.hpp"

using namespace k3cliff;
using k3test::rand_int;

TEST_CASE("new_params accepts the theorem boundary g = 2s+14") {
    auto p = new_params(14, 0, Regime::Theorem);
    CHECK(p.d == 14);
    CHECK(p.g == 14);
}

TEST_CASE("new_params rejects g = 2s+13 in the theorem regime") {
    try {
        new_params(13, 0, Regime::Theorem);
        FAIL("expected RegimeViolation");
    } catch (const RegimeViolation& e) {
        CHECK(std::find(e.failed.begin(), e.failed.end(), "g >= 2s+14") != e.failed.end());
    }
}

TEST_CASE("new_params rejects the excluded pair (d,g) = (7,4)") {
    try {
        new_params(4, -3, Regime::Base);
        FAIL("expected RegimeViolation");
    } catch (const RegimeViolation& e) {
        CHECK(std::find(e.failed.begin(), e.failed.end(), "(d,g) != (7,4)") != e.failed.end());
    }
}

TEST_CASE("intersection pairing on pinned examples") {
    CHECK(intersect(new_params(14, 0, Regime::Base), kHyperplane, kCurve) == 14);
    CHECK(intersect(new_params(12, -1, Regime::Base), {3, -1}, kCurve) == 17);
    CHECK(intersect(new_params(20, 3, Regime::Base), {4, -1}, kCurve) == 30);
}

TEST_CASE("self-intersection on pinned examples") {
    CHECK(self_int(new_params(14, 0, Regime::Base), {1, -1}) == 4);  // (C-H)^2 = 2s+4
    CHECK(self_int(new_params(12, -1, Regime::Base), {3, -1}) == -2);
    CHECK(self_int(new_params(13, 0, Regime::Base), {3, -1}) == 0);
}

TEST_CASE("chi on pinned examples") {
    CHECK(chi(new_params(14, 0, Regime::Base), kHyperplane) == 5);
    CHECK(chi(new_params(14, 0, Regime::Base), {0, 0}) == 2);
    CHECK(chi(new_params(12, -1, Regime::Base), {3, -1}) == 1);
}

TEST_CASE("discriminant on pinned examples") {
    CHECK(discriminant(new_params(13, 0, Regime::Base)) == 25);
    CHECK(discriminant(new_params(14, 0, Regime::Base)) == 40);
    CHECK(discriminant(new_params(21, 4, Regime::Base)) == 49);
}

TEST_CASE("pairing is symmetric, bilinear, and even") {
    for (int i = 0; i < 20000; ++i) {
        Int g = rand_int(0, 300);
        Int s = rand_int(-40, 40);
        SurfaceParams p = raw_params(g, s);
        DivisorClass d1{rand_int(-50, 50), rand_int(-50, 50)};
        DivisorClass d2{rand_int(-50, 50), rand_int(-50, 50)};
        DivisorClass d3{rand_int(-50, 50), rand_int(-50, 50)};

        REQUIRE(intersect(p, d1, d2) == intersect(p, d2, d1));
        REQUIRE(self_int(p, d1) % 2 == 0);

        Int a = rand_int(-20, 20), b = rand_int(-20, 20);
        DivisorClass combo{a * d1.m + b * d2.m, a * d1.n + b * d2.n};
        REQUIRE(intersect(p, combo, d3) ==
                a * intersect(p, d1, d3) + b * intersect(p, d2, d3));
    }
}

TEST_CASE("discriminant identity g^2 - (2s+12)g + s^2 + 12") {
    for (int i = 0; i < 20000; ++i) {
        Int g = rand_int(-200, 500);
        Int s = rand_int(-200, 200);
        SurfaceParams p = raw_params(g, s);
        REQUIRE(discriminant(p) == g * g - (2 * s + 12) * g + s * s + 12);
    }
}

TEST_CASE("d^2 - 12g > 0 throughout the base regime up to g = 500") {
    for (Int s = -100; s <= 100; ++s) {
        for (Int g = std::max<Int>(0, 2 * s + 13); g <= 500; ++g) {
            if (!regime_failures(g, s, Regime::Base).empty()) continue;
            SurfaceParams p = new_params(g, s, Regime::Base);
            REQUIRE(p.d * p.d - 12 * p.g > 0);
            REQUIRE(p.d * p.d - 12 * p.g == p.g * (p.g - 2 * p.s - 12) + p.s * p.s);
            REQUIRE(discriminant(p) > 0);
        }
    }
}
