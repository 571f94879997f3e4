#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3cliff/classifier.hpp"

namespace k3cliff {

enum class ExclusionTarget { PencilCminusH, GeneralD };
enum class Contradiction {
    NoCandidateF,        // no (-2)-class can be a fixed component here
    MdotCNonpositive,    // moving part M has M.C <= 0, against ampleness
    CFdotCNonpositive,   // C.(C-2E) < 0 kills the isotropic decomposition
    BoxEmpty,            // the inequality box for C-D has no integer point
    OnlyTwoH,            // unique box solution is C-D ~ 2H, fixed-component free
};

std::string exclusion_target_name(ExclusionTarget t);
std::string contradiction_name(Contradiction c);

struct ExclusionReport {
    SurfaceParams params;
    ExclusionTarget target{ExclusionTarget::GeneralD};
    std::optional<MinusTwoRecord> candidate;
    Contradiction contradiction{Contradiction::NoCandidateF};
    // Evaluated integers backing the verdict, re-derivable from params.
    std::vector<std::pair<std::string, Int>> detail;
};

// |C-H| has no fixed component: the only candidate case has moving part
// M = 2C - ((s+7)/2)H with M.C = -(3s^2+6s-9)/4 <= 0. Requires s >= -1.
ExclusionReport check_pencil_c_minus_h(const SurfaceParams& p);

// The general fixed-component filter applied to one parameter point: the
// candidate F (if any), the closed-form value of (C-F).C, and whether the
// point survives (i.e. the generic contradiction fails there).
struct ExceptionalFilter {
    SurfaceParams params;
    MinusTwoRecord candidate;
    Int cf_dot_c{0};  // (C-F).C
    bool survives{false};
};

std::optional<ExceptionalFilter> exceptional_filter(const SurfaceParams& p);

// Scan grid: s in [s_lo, s_hi], g in [2s + g_rel_lo, 2s + g_rel_hi].
struct GridRange {
    Int s_lo{0}, s_hi{0};
    Int g_rel_lo{0}, g_rel_hi{0};
};

// Parameter points where the generic (C-F).C argument fails; on any window
// within s in [-1, 25] this is a subset of {(12,-1), (15,1), (20,3)}.
std::vector<SurfaceParams> exceptional_triples(const GridRange& grid);

// For an exceptional point, enumerate C-D inside the double inequality box
//   F.H+3 <= (C-D).H <= d-3,   F.C+1 <= (C-D).C <= 2g-3.
// Widen scales the outer search box (for stability checks only).
ExclusionReport exceptional_box_check(const SurfaceParams& p, Int widen = 1);

// For every primitive isotropic E, C.(C-2E) < 0, so no admissible D has
// D^2 = 0 or (C-D)^2 = 0. Requires s >= -1.
ExclusionReport no_isotropic_decomposition(const SurfaceParams& p);

}  // namespace k3cliff
