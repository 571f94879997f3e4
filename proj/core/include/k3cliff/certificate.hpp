#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "k3cliff/classifier.hpp"
#include "k3cliff/clifford.hpp"
#include "k3cliff/fixedcomp.hpp"

namespace k3cliff {

using Json = nlohmann::ordered_json;

// One machine-readable verdict record per parameter point. Stages whose
// preconditions do not apply (e.g. s < -1) are absent and count as passed.
struct CertificateDocument {
    std::string schema_version;
    std::string tool_version;
    std::optional<std::string> timestamp;
    SurfaceParams params;

    std::optional<AmpleCertificate> ample;

    Int r_max{0};
    std::vector<MinusTwoRecord> minus_two;
    bool minus_two_equivalent{false};

    std::optional<std::vector<IsotropicRecord>> isotropic;

    std::optional<ExclusionReport> pencil;
    bool exceptional{false};
    std::optional<ExclusionReport> box;
    std::optional<ExclusionReport> isotropic_decomposition;

    CliffordCertificate clifford;

    struct Checks {
        bool ample{true};
        bool minus_two_equivalence{true};
        bool isotropic_classified{true};
        bool pencil_excluded{true};
        bool box_consistent{true};
        bool no_isotropic_decomposition{true};
        bool theorem{true};
        bool overall{true};
    } checks;
};

struct CertifyOptions {
    Regime regime{Regime::Theorem};
    std::optional<Int> window;  // default max(50, 4 * n_hi)
    bool with_timestamp{true};
};

// Full pipeline for one (g, s); throws RegimeViolation on invalid input.
CertificateDocument build_certificate(Int g, Int s, const CertifyOptions& opts);

Json to_json(const CertificateDocument& doc);
CertificateDocument document_from_json(const Json& j);

std::string csv_header();
std::string csv_row(const CertificateDocument& doc);
std::string pretty(const CertificateDocument& doc);

enum class OutputFormat { JsonLines, Csv, Pretty };
OutputFormat format_from_name(const std::string& name);

struct ScanConfig {
    Int s_lo{0}, s_hi{0};
    bool g_relative{true};  // g in [2s + g_lo, 2s + g_hi] vs absolute [g_lo, g_hi]
    Int g_lo{0}, g_hi{0};
    Regime regime{Regime::Base};
    std::optional<Int> window;
    OutputFormat format{OutputFormat::JsonLines};
    bool with_timestamp{false};
};

struct ScanSummary {
    Int total{0};
    Int passes{0};
    Int failures{0};
    Int regime_violations{0};
    Int exceptional{0};
};

// Emits one record per grid point in (s asc, g asc) order.
ScanSummary run_scan(const ScanConfig& config, std::ostream& out);

}  // namespace k3cliff
