#include "k3cliff/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>

#include "k3cliff/version.hpp"

namespace k3cliff {

namespace {

std::string utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

MinusTwoCase minus_two_case_from_name(const std::string& name) {
    for (auto c : {MinusTwoCase::GenericHighDegree, MinusTwoCase::CMinusH,
                   MinusTwoCase::GThirdHMinusC, MinusTwoCase::SPlus4HMinusC,
                   MinusTwoCase::HalfSPlus5HMinusC})
        if (minus_two_case_name(c) == name) return c;
    throw Error("unknown (-2)-case: " + name);
}

IsotropicCase isotropic_case_from_name(const std::string& name) {
    for (auto c : {IsotropicCase::SPlus3HMinusC, IsotropicCase::ThreeCMinus4H,
                   IsotropicCase::HalfSPlus4HMinusC, IsotropicCase::ThreeCMinus5H})
        if (isotropic_case_name(c) == name) return c;
    throw Error("unknown isotropic case: " + name);
}

ExclusionTarget target_from_name(const std::string& name) {
    for (auto t : {ExclusionTarget::PencilCminusH, ExclusionTarget::GeneralD})
        if (exclusion_target_name(t) == name) return t;
    throw Error("unknown exclusion target: " + name);
}

Contradiction contradiction_from_name(const std::string& name) {
    for (auto c : {Contradiction::NoCandidateF, Contradiction::MdotCNonpositive,
                   Contradiction::CFdotCNonpositive, Contradiction::BoxEmpty,
                   Contradiction::OnlyTwoH})
        if (contradiction_name(c) == name) return c;
    throw Error("unknown contradiction: " + name);
}

Json class_json(DivisorClass c) { return Json{{"m", c.m}, {"n", c.n}}; }
DivisorClass class_from_json(const Json& j) { return {j.at("m"), j.at("n")}; }

Json record_json(const MinusTwoRecord& rec) {
    return Json{{"m", rec.cls.m}, {"n", rec.cls.n}, {"r", rec.r},
                {"case", minus_two_case_name(rec.tag)}};
}

MinusTwoRecord record_from_json(const Json& j) {
    return MinusTwoRecord{{j.at("m"), j.at("n")}, j.at("r"),
                          minus_two_case_from_name(j.at("case"))};
}

Json report_json(const ExclusionReport& rep) {
    Json j;
    j["target"] = exclusion_target_name(rep.target);
    j["contradiction"] = contradiction_name(rep.contradiction);
    j["candidate"] = rep.candidate ? record_json(*rep.candidate) : Json(nullptr);
    Json detail = Json::array();
    for (const auto& [label, value] : rep.detail)
        detail.push_back(Json{{"label", label}, {"value", value}});
    j["detail"] = detail;
    return j;
}

ExclusionReport report_from_json(const Json& j, const SurfaceParams& p) {
    ExclusionReport rep;
    rep.params = p;
    rep.target = target_from_name(j.at("target"));
    rep.contradiction = contradiction_from_name(j.at("contradiction"));
    if (!j.at("candidate").is_null()) rep.candidate = record_from_json(j.at("candidate"));
    for (const auto& entry : j.at("detail"))
        rep.detail.emplace_back(entry.at("label"), entry.at("value"));
    return rep;
}

}  // namespace

OutputFormat format_from_name(const std::string& name) {
    if (name == "jsonl") return OutputFormat::JsonLines;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "pretty") return OutputFormat::Pretty;
    throw Error("unknown format: " + name);
}

CertificateDocument build_certificate(Int g, Int s, const CertifyOptions& opts) {
    SurfaceParams p = new_params(g, s, opts.regime);

    CertificateDocument doc;
    doc.schema_version = kSchemaVersion;
    doc.tool_version = kToolVersion;
    if (opts.with_timestamp) doc.timestamp = utc_now();
    doc.params = p;

    auto bounds = enumeration_bounds(p);
    Int window = opts.window.value_or(std::max<Int>(50, 4 * bounds.n_hi));

    if (p.g >= 2 && p.g + p.s > 2) {
        doc.ample = ample_certificate(p, window);
        doc.checks.ample = doc.ample->verdict;
    }

    doc.r_max = std::max<Int>(1, p.d - 6);
    doc.minus_two = minus_two_closed_form(p);
    auto brute = minus_two_bruteforce(p, doc.r_max);
    auto low_degree = doc.minus_two;
    std::erase_if(low_degree, [&](const MinusTwoRecord& rec) { return rec.r > doc.r_max; });
    doc.minus_two_equivalent = brute == low_degree;
    doc.checks.minus_two_equivalence = doc.minus_two_equivalent;

    if (p.s >= -1) {
        try {
            doc.isotropic = isotropic_primitive(p);
        } catch (const ClassificationMismatch&) {
            doc.isotropic = std::vector<IsotropicRecord>{};
            doc.checks.isotropic_classified = false;
        }

        doc.pencil = check_pencil_c_minus_h(p);
        doc.checks.pencil_excluded =
            doc.pencil->contradiction == Contradiction::NoCandidateF ||
            doc.pencil->contradiction == Contradiction::MdotCNonpositive;

        auto filter = exceptional_filter(p);
        doc.exceptional = filter && filter->survives;
        if (doc.exceptional) {
            doc.box = exceptional_box_check(p);
            doc.checks.box_consistent =
                doc.box->contradiction == Contradiction::BoxEmpty ||
                doc.box->contradiction == Contradiction::OnlyTwoH;
        }

        doc.isotropic_decomposition = no_isotropic_decomposition(p);
        doc.checks.no_isotropic_decomposition =
            doc.isotropic_decomposition->contradiction == Contradiction::NoCandidateF ||
            doc.isotropic_decomposition->contradiction == Contradiction::CFdotCNonpositive;
    }

    doc.clifford = clifford_certificate(p);
    doc.checks.theorem = doc.clifford.theorem_holds && doc.clifford.gamma_below_cliff_max;

    doc.checks.overall = doc.checks.ample && doc.checks.minus_two_equivalence &&
                         doc.checks.isotropic_classified && doc.checks.pencil_excluded &&
                         doc.checks.box_consistent && doc.checks.no_isotropic_decomposition &&
                         doc.checks.theorem;
    return doc;
}

Json to_json(const CertificateDocument& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    j["tool_version"] = doc.tool_version;
    if (doc.timestamp) j["timestamp"] = *doc.timestamp;
    j["params"] = Json{{"g", doc.params.g},
                       {"s", doc.params.s},
                       {"d", doc.params.d},
                       {"regime", regime_name(doc.params.regime)}};

    if (doc.ample) {
        Json cases = Json::array();
        for (const auto& c : doc.ample->analytic_cases)
            cases.push_back(Json{{"name", c.name},
                                 {"inequality", c.inequality},
                                 {"value", c.value},
                                 {"pass", c.pass}});
        j["ample"] = Json{{"verdict", doc.ample->verdict},
                          {"window", doc.ample->falsifier_window},
                          {"analytic_cases", cases},
                          {"counterexample", doc.ample->counterexample
                                                 ? class_json(*doc.ample->counterexample)
                                                 : Json(nullptr)}};
    } else {
        j["ample"] = nullptr;
    }

    Json records = Json::array();
    for (const auto& rec : doc.minus_two) records.push_back(record_json(rec));
    j["minus_two"] = Json{{"r_max", doc.r_max},
                          {"equivalent", doc.minus_two_equivalent},
                          {"records", records}};

    if (doc.isotropic) {
        Json iso = Json::array();
        for (const auto& rec : *doc.isotropic)
            iso.push_back(Json{{"m", rec.cls.m},
                               {"n", rec.cls.n},
                               {"case", isotropic_case_name(rec.tag)},
                               {"t", rec.t}});
        j["isotropic"] = Json{{"records", iso}};
    } else {
        j["isotropic"] = nullptr;
    }

    j["fixedcomp"] =
        Json{{"pencil", doc.pencil ? report_json(*doc.pencil) : Json(nullptr)},
             {"exceptional", doc.exceptional},
             {"box", doc.box ? report_json(*doc.box) : Json(nullptr)},
             {"isotropic_decomposition", doc.isotropic_decomposition
                                             ? report_json(*doc.isotropic_decomposition)
                                             : Json(nullptr)}};

    Json argmin = Json::array();
    Json admissible_min = nullptr;
    if (doc.clifford.admissible_min) {
        for (auto c : doc.clifford.admissible_min->argmin) argmin.push_back(class_json(c));
        admissible_min = Json{{"f", doc.clifford.admissible_min->f}, {"argmin", argmin}};
    }
    j["clifford"] = Json{{"cliff_max", doc.clifford.cliff_max},
                         {"admissible_min", admissible_min},
                         {"theorem_holds", doc.clifford.theorem_holds},
                         {"gamma_rank2", doc.clifford.gamma_rank2.str()},
                         {"mercat_lower", doc.clifford.mercat_lower.str()},
                         {"cliff2_equal", doc.clifford.cliff2_equal},
                         {"gamma_below_cliff_max", doc.clifford.gamma_below_cliff_max}};

    j["checks"] = Json{{"ample", doc.checks.ample},
                       {"minus_two_equivalence", doc.checks.minus_two_equivalence},
                       {"isotropic_classified", doc.checks.isotropic_classified},
                       {"pencil_excluded", doc.checks.pencil_excluded},
                       {"box_consistent", doc.checks.box_consistent},
                       {"no_isotropic_decomposition", doc.checks.no_isotropic_decomposition},
                       {"theorem", doc.checks.theorem},
                       {"overall", doc.checks.overall}};
    return j;
}

CertificateDocument document_from_json(const Json& j) {
    CertificateDocument doc;
    doc.schema_version = j.at("schema_version");
    doc.tool_version = j.at("tool_version");
    if (j.contains("timestamp")) doc.timestamp = j.at("timestamp").get<std::string>();
    const Json& pj = j.at("params");
    doc.params = SurfaceParams{pj.at("g"), pj.at("s"), pj.at("d"),
                               regime_from_name(pj.at("regime"))};

    if (!j.at("ample").is_null()) {
        const Json& aj = j.at("ample");
        AmpleCertificate cert;
        cert.params = doc.params;
        cert.verdict = aj.at("verdict");
        cert.falsifier_window = aj.at("window");
        for (const auto& cj : aj.at("analytic_cases"))
            cert.analytic_cases.push_back(
                {cj.at("name"), cj.at("inequality"), cj.at("value"), cj.at("pass")});
        if (!aj.at("counterexample").is_null())
            cert.counterexample = class_from_json(aj.at("counterexample"));
        doc.ample = cert;
    }

    const Json& mj = j.at("minus_two");
    doc.r_max = mj.at("r_max");
    doc.minus_two_equivalent = mj.at("equivalent");
    for (const auto& rj : mj.at("records")) doc.minus_two.push_back(record_from_json(rj));

    if (!j.at("isotropic").is_null()) {
        std::vector<IsotropicRecord> iso;
        for (const auto& rj : j.at("isotropic").at("records"))
            iso.push_back(IsotropicRecord{{rj.at("m"), rj.at("n")},
                                          isotropic_case_from_name(rj.at("case")),
                                          rj.at("t")});
        doc.isotropic = std::move(iso);
    }

    const Json& fj = j.at("fixedcomp");
    if (!fj.at("pencil").is_null())
        doc.pencil = report_from_json(fj.at("pencil"), doc.params);
    doc.exceptional = fj.at("exceptional");
    if (!fj.at("box").is_null()) doc.box = report_from_json(fj.at("box"), doc.params);
    if (!fj.at("isotropic_decomposition").is_null())
        doc.isotropic_decomposition =
            report_from_json(fj.at("isotropic_decomposition"), doc.params);

    const Json& cj = j.at("clifford");
    doc.clifford.params = doc.params;
    doc.clifford.cliff_max = cj.at("cliff_max");
    if (!cj.at("admissible_min").is_null()) {
        Minimum min;
        min.f = cj.at("admissible_min").at("f");
        for (const auto& aj : cj.at("admissible_min").at("argmin"))
            min.argmin.push_back(class_from_json(aj));
        doc.clifford.admissible_min = std::move(min);
    }
    doc.clifford.theorem_holds = cj.at("theorem_holds");
    doc.clifford.gamma_rank2 = Rational::parse(cj.at("gamma_rank2"));
    doc.clifford.mercat_lower = Rational::parse(cj.at("mercat_lower"));
    doc.clifford.cliff2_equal = cj.at("cliff2_equal");
    doc.clifford.gamma_below_cliff_max = cj.at("gamma_below_cliff_max");

    const Json& kj = j.at("checks");
    doc.checks.ample = kj.at("ample");
    doc.checks.minus_two_equivalence = kj.at("minus_two_equivalence");
    doc.checks.isotropic_classified = kj.at("isotropic_classified");
    doc.checks.pencil_excluded = kj.at("pencil_excluded");
    doc.checks.box_consistent = kj.at("box_consistent");
    doc.checks.no_isotropic_decomposition = kj.at("no_isotropic_decomposition");
    doc.checks.theorem = kj.at("theorem");
    doc.checks.overall = kj.at("overall");
    return doc;
}

std::string csv_header() {
    return "g,s,d,regime,ample_verdict,minus_two_count,minus_two_equivalent,"
           "isotropic_count,pencil_contradiction,exceptional,box_contradiction,"
           "no_isotropic_decomposition,cliff_max,min_f,theorem_holds,gamma_rank2,"
           "mercat_lower,cliff2_equal,overall";
}

std::string csv_row(const CertificateDocument& doc) {
    std::ostringstream out;
    out << doc.params.g << ',' << doc.params.s << ',' << doc.params.d << ','
        << regime_name(doc.params.regime) << ','
        << (doc.ample ? (doc.ample->verdict ? "true" : "false") : "") << ','
        << doc.minus_two.size() << ',' << (doc.minus_two_equivalent ? "true" : "false") << ','
        << (doc.isotropic ? std::to_string(doc.isotropic->size()) : "") << ','
        << (doc.pencil ? contradiction_name(doc.pencil->contradiction) : "") << ','
        << (doc.exceptional ? "true" : "false") << ','
        << (doc.box ? contradiction_name(doc.box->contradiction) : "") << ','
        << (doc.checks.no_isotropic_decomposition ? "true" : "false") << ','
        << doc.clifford.cliff_max << ','
        << (doc.clifford.admissible_min ? std::to_string(doc.clifford.admissible_min->f) : "")
        << ',' << (doc.clifford.theorem_holds ? "true" : "false") << ','
        << doc.clifford.gamma_rank2.str() << ',' << doc.clifford.mercat_lower.str() << ','
        << (doc.clifford.cliff2_equal ? "true" : "false") << ','
        << (doc.checks.overall ? "true" : "false");
    return out.str();
}

std::string pretty(const CertificateDocument& doc) {
    std::ostringstream out;
    out << "certificate g=" << doc.params.g << " s=" << doc.params.s << " d=" << doc.params.d
        << " (" << regime_name(doc.params.regime) << ")\n";
    if (doc.ample) {
        out << "  ample: " << (doc.ample->verdict ? "yes" : "NO") << " (window "
            << doc.ample->falsifier_window << ")\n";
        for (const auto& c : doc.ample->analytic_cases)
            out << "    " << c.name << ": " << c.inequality << " -> " << c.value
                << (c.pass ? " ok" : " FAIL") << "\n";
    }
    out << "  (-2)-classes with F.H <= " << doc.r_max << ": " << doc.minus_two.size()
        << ", oracle equivalent: " << (doc.minus_two_equivalent ? "yes" : "NO") << "\n";
    for (const auto& rec : doc.minus_two)
        out << "    F=(" << rec.cls.m << "," << rec.cls.n << ") F.H=" << rec.r << " ["
            << minus_two_case_name(rec.tag) << "]\n";
    if (doc.isotropic) {
        out << "  isotropic classes: " << doc.isotropic->size() << "\n";
        for (const auto& rec : *doc.isotropic)
            out << "    E=(" << rec.cls.m << "," << rec.cls.n << ") t=" << rec.t << " ["
                << isotropic_case_name(rec.tag) << "]\n";
    }
    if (doc.pencil)
        out << "  pencil |C-H|: " << contradiction_name(doc.pencil->contradiction) << "\n";
    out << "  exceptional: " << (doc.exceptional ? "yes" : "no");
    if (doc.box) out << " -> " << contradiction_name(doc.box->contradiction);
    out << "\n";
    if (doc.isotropic_decomposition)
        out << "  isotropic decomposition: "
            << contradiction_name(doc.isotropic_decomposition->contradiction) << "\n";
    out << "  cliff_max=" << doc.clifford.cliff_max;
    if (doc.clifford.admissible_min) {
        out << " min_f=" << doc.clifford.admissible_min->f << " argmin=";
        for (auto c : doc.clifford.admissible_min->argmin)
            out << "(" << c.m << "," << c.n << ")";
    } else {
        out << " admissible set empty";
    }
    out << "\n  theorem_holds=" << (doc.clifford.theorem_holds ? "yes" : "NO")
        << " gamma_rank2=" << doc.clifford.gamma_rank2.str()
        << " mercat_lower=" << doc.clifford.mercat_lower.str()
        << " cliff2_equal=" << (doc.clifford.cliff2_equal ? "yes" : "no") << "\n";
    out << "  overall: " << (doc.checks.overall ? "PASS" : "FAIL") << "\n";
    return out.str();
}

ScanSummary run_scan(const ScanConfig& config, std::ostream& out) {
    ScanSummary summary;
    if (config.format == OutputFormat::Csv) out << csv_header() << "\n";
    for (Int s = config.s_lo; s <= config.s_hi; ++s) {
        Int g_lo = config.g_relative ? 2 * s + config.g_lo : config.g_lo;
        Int g_hi = config.g_relative ? 2 * s + config.g_hi : config.g_hi;
        for (Int g = g_lo; g <= g_hi; ++g) {
            ++summary.total;
            CertifyOptions opts{config.regime, config.window, config.with_timestamp};
            try {
                CertificateDocument doc = build_certificate(g, s, opts);
                if (doc.checks.overall)
                    ++summary.passes;
                else
                    ++summary.failures;
                if (doc.exceptional) ++summary.exceptional;
                switch (config.format) {
                    case OutputFormat::JsonLines: out << to_json(doc).dump() << "\n"; break;
                    case OutputFormat::Csv: out << csv_row(doc) << "\n"; break;
                    case OutputFormat::Pretty: out << pretty(doc); break;
                }
            } catch (const RegimeViolation& e) {
                ++summary.regime_violations;
                if (config.format == OutputFormat::JsonLines) {
                    Json err{{"params", Json{{"g", g}, {"s", s}}},
                             {"regime_error", e.failed}};
                    out << err.dump() << "\n";
                }
            }
        }
    }
    return summary;
}

}  // namespace k3cliff
