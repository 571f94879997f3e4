// Command-line front end: per-point certification, grid scans, class
// listings, and genus witnesses for a target Clifford index.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input
// (regime violation, gamma too small, bad flags).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "k3cliff/certificate.hpp"
#include "k3cliff/version.hpp"

namespace {

using namespace k3cliff;

constexpr const char* kOutDirEnv = "K3CLIFF_OUT_DIR";

std::pair<Int, Int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("range must be A:B, got " + text);
    Int lo = std::stoll(text.substr(0, colon));
    Int hi = std::stoll(text.substr(colon + 1));
    if (lo > hi) throw Error("empty range " + text);
    return {lo, hi};
}

// Data goes to stdout and, when requested, to a file (relative paths
// resolve against $K3CLIFF_OUT_DIR).
class Output {
  public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        std::filesystem::path target(path);
        if (target.is_relative()) {
            if (const char* dir = std::getenv(kOutDirEnv)) target = std::filesystem::path(dir) / target;
        }
        file_.open(target);
        if (!file_) throw Error("cannot open output file " + target.string());
    }

    void write(const std::string& text) {
        std::cout << text;
        if (file_.is_open()) file_ << text;
    }

  private:
    std::ofstream file_;
};

void emit_document(const CertificateDocument& doc, OutputFormat format, Output& out) {
    switch (format) {
        case OutputFormat::JsonLines: out.write(to_json(doc).dump() + "\n"); break;
        case OutputFormat::Csv: out.write(csv_header() + "\n" + csv_row(doc) + "\n"); break;
        case OutputFormat::Pretty: out.write(pretty(doc)); break;
    }
}

int cmd_certify(Int g, Int s, const CertifyOptions& opts, OutputFormat format, Output& out) {
    CertificateDocument doc = build_certificate(g, s, opts);
    emit_document(doc, format, out);
    return doc.checks.overall ? 0 : 1;
}

int cmd_classify(Int g, Int s, std::optional<Int> r_max, OutputFormat format, Output& out) {
    SurfaceParams p = new_params(g, s, Regime::Base);
    Int bound = r_max.value_or(std::max<Int>(1, p.d - 6));

    Json j;
    j["params"] = Json{{"g", p.g}, {"s", p.s}, {"d", p.d}};
    j["r_max"] = bound;
    Json brute = Json::array();
    for (const auto& rec : minus_two_bruteforce(p, bound))
        brute.push_back(Json{{"m", rec.cls.m}, {"n", rec.cls.n}, {"r", rec.r},
                             {"case", minus_two_case_name(rec.tag)}});
    j["minus_two_bruteforce"] = brute;
    Json closed = Json::array();
    for (const auto& rec : minus_two_closed_form(p))
        closed.push_back(Json{{"m", rec.cls.m}, {"n", rec.cls.n}, {"r", rec.r},
                              {"case", minus_two_case_name(rec.tag)}});
    j["minus_two_closed_form"] = closed;
    if (p.s >= -1) {
        Json iso = Json::array();
        for (const auto& rec : isotropic_primitive(p))
            iso.push_back(Json{{"m", rec.cls.m}, {"n", rec.cls.n}, {"t", rec.t},
                               {"case", isotropic_case_name(rec.tag)}});
        j["isotropic"] = iso;
    } else {
        j["isotropic"] = nullptr;
    }

    if (format == OutputFormat::Pretty) {
        out.write(j.dump(2) + "\n");
    } else {
        out.write(j.dump() + "\n");
    }
    return 0;
}

int cmd_witness(Int gamma, const CertifyOptions& opts, OutputFormat format, Output& out) {
    auto witnesses = witness_for_gamma(gamma);
    bool all_ok = true;
    for (const auto& w : witnesses) {
        if (w.external_result) {
            Json j{{"gamma", gamma},
                   {"genus", w.genus},
                   {"external_result_required", true},
                   {"note", "outside the verified regime; rests on a prior result"}};
            out.write(j.dump() + "\n");
            continue;
        }
        CertifyOptions point_opts = opts;
        CertificateDocument doc =
            build_certificate(w.params->g, w.params->s, point_opts);
        emit_document(doc, format, out);
        all_ok = all_ok && doc.checks.overall && doc.clifford.cliff_max == gamma &&
                 doc.clifford.cliff2_equal;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for rank-2 Picard lattice Clifford-index certificates"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    std::string regime_name_flag = "theorem";
    std::string format_name = "jsonl";
    std::string out_path;
    std::optional<Int> window;
    bool no_timestamp = false;

    Int g = 0, s = 0, gamma = 0;
    std::optional<Int> r_max_flag;
    std::string s_range, g_rel, g_range;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format: jsonl, csv, pretty");
        cmd->add_option("--window", window, "Falsifier window override (default max(50, 4*n_hi))");
        cmd->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
        cmd->add_option("--out", out_path, "Also write output to this file");
    };

    auto* certify = app.add_subcommand("certify", "Run the full pipeline for one (g, s)");
    certify->add_option("--g", g, "Genus")->required();
    certify->add_option("--s", s, "Offset s (d = g - s)")->required();
    certify->add_option("--regime", regime_name_flag, "base or theorem (default theorem)");
    add_common(certify);

    auto* scan = app.add_subcommand("scan", "Certify a grid of parameter points");
    scan->add_option("--s-range", s_range, "s interval A:B")->required();
    scan->add_option("--g-rel", g_rel, "g interval relative to 2s, offsets A:B");
    scan->add_option("--g-range", g_range, "absolute g interval A:B");
    scan->add_option("--regime", regime_name_flag, "base or theorem (default base for scans)");
    add_common(scan);

    auto* classify = app.add_subcommand("classify", "List (-2) and isotropic classes for (g, s)");
    classify->add_option("--g", g, "Genus")->required();
    classify->add_option("--s", s, "Offset s")->required();
    classify->add_option("--r-max", r_max_flag, "Upper bound on F.H for the brute-force list");
    add_common(classify);

    auto* witness = app.add_subcommand("witness", "Genus witnesses 2*gamma+1, 2*gamma+2");
    witness->add_option("--gamma", gamma, "Target Clifford index (>= 5)")->required();
    add_common(witness);

    CLI11_PARSE(app, argc, argv);

    try {
        OutputFormat format = format_from_name(format_name);
        Output out(out_path);
        CertifyOptions opts;
        opts.window = window;
        opts.with_timestamp = !no_timestamp;

        if (certify->parsed()) {
            opts.regime = regime_from_name(regime_name_flag);
            return cmd_certify(g, s, opts, format, out);
        }
        if (scan->parsed()) {
            if (g_rel.empty() == g_range.empty()) {
                std::cerr << "scan needs exactly one of --g-rel or --g-range\n";
                return 2;
            }
            ScanConfig config;
            std::tie(config.s_lo, config.s_hi) = parse_range(s_range);
            config.g_relative = !g_rel.empty();
            std::tie(config.g_lo, config.g_hi) =
                parse_range(config.g_relative ? g_rel : g_range);
            config.regime = scan->count("--regime") ? regime_from_name(regime_name_flag)
                                                    : Regime::Base;
            config.window = window;
            config.format = format;
            config.with_timestamp = !no_timestamp;

            std::ostringstream buffer;
            ScanSummary summary = run_scan(config, buffer);
            out.write(buffer.str());
            std::cerr << "scan: " << summary.total << " points, " << summary.passes
                      << " pass, " << summary.failures << " fail, "
                      << summary.regime_violations << " regime violations, "
                      << summary.exceptional << " exceptional\n";
            return summary.failures == 0 ? 0 : 1;
        }
        if (classify->parsed()) {
            return cmd_classify(g, s, r_max_flag, format, out);
        }
        if (witness->parsed()) {
            opts.regime = Regime::Theorem;
            return cmd_witness(gamma, opts, format, out);
        }
    } catch (const RegimeViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GammaTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
