#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cliff/lattice.hpp"

namespace k3cliff {

// Which closed-form case produced a (-2)-class. The low-degree cases
// (F.H <= d-6) are enumerable; everything with F.H >= d-5 is only tagged.
enum class MinusTwoCase {
    GenericHighDegree,   // F.H >= d-5
    CMinusH,             // s=-3, F ~ C-H, F.H = d-6
    GThirdHMinusC,       // s=-3, 3|g, F ~ (g/3)H-C, F.H = d-6
    SPlus4HMinusC,       // g=4s+16, F ~ (s+4)H-C, F.H = d-8
    HalfSPlus5HMinusC,   // g=(5/2)(s+5), F ~ ((s+5)/2)H-C, F.H = d-10
};

std::string minus_two_case_name(MinusTwoCase c);

struct MinusTwoRecord {
    DivisorClass cls;
    Int r{0};  // F.H
    MinusTwoCase tag{MinusTwoCase::GenericHighDegree};

    friend bool operator==(const MinusTwoRecord&, const MinusTwoRecord&) = default;
};

// All classes F with F^2 = -2 and F.H in [1, r_max], found by exhaustive
// search over n^2 <= (r_max^2 + 12)/disc (from n^2 disc = r^2 + 12).
// Sorted by (r, n, m). Throws DegenerateDiscriminant when disc <= 0.
std::vector<MinusTwoRecord> minus_two_bruteforce(const SurfaceParams& p, Int r_max);

// The classes with F.H <= d-6 predicted by the closed-form case analysis;
// empty when no side condition holds for (g, s). Sorted by (r, n, m).
std::vector<MinusTwoRecord> minus_two_closed_form(const SurfaceParams& p);

enum class IsotropicCase {
    SPlus3HMinusC,      // g=4s+13, E ~ (s+3)H-C
    ThreeCMinus4H,      // g=4s+13, E ~ 3C-4H
    HalfSPlus4HMinusC,  // g=(5s/2)+11, E ~ ((s+4)/2)H-C
    ThreeCMinus5H,      // g=(5s/2)+11, E ~ 3C-5H
};

std::string isotropic_case_name(IsotropicCase c);

struct IsotropicRecord {
    DivisorClass cls;  // primitive, E.H > 0
    IsotropicCase tag{IsotropicCase::SPlus3HMinusC};
    Int t{0};  // t >= 0 with t^2 = discriminant

    friend bool operator==(const IsotropicRecord&, const IsotropicRecord&) = default;
};

// Primitive classes E with E^2 = 0 and E.H > 0. Empty unless the
// discriminant is a perfect square. Sorted by (E.H, n, m). Requires s >= -1.
std::vector<IsotropicRecord> isotropic_primitive(const SurfaceParams& p);

struct AnalyticCase {
    std::string name;
    std::string inequality;
    Int value{0};
    bool pass{false};

    friend bool operator==(const AnalyticCase&, const AnalyticCase&) = default;
};

// Ampleness of C: the analytic part evaluates the sign-quadrant inequalities
// of the proof; the falsifier scans candidate irreducible classes
// (D.H > 0, D^2 >= -2) up to |m|,|n| <= window for C.D <= 0.
struct AmpleCertificate {
    SurfaceParams params;
    bool verdict{false};
    std::vector<AnalyticCase> analytic_cases;
    Int falsifier_window{0};
    std::optional<DivisorClass> counterexample;
};

AmpleCertificate ample_certificate(const SurfaceParams& p, Int window);

// Exact integer square root when x is a perfect square.
inline std::optional<Int> is_perfect_square(Int x) { return perfect_square_root(x); }

}  // namespace k3cliff
