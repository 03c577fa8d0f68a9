#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cwick/checks.hpp"
#include "cwick/version.hpp"

namespace cwick {

// FNV-1a, used to fingerprint spec file bytes in reports. Stable across
// platforms, unlike std::hash.
inline std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << h;
    return out.str();
}

struct DimRow {
    int degree;
    std::uint64_t full;      // dim^degree
    std::uint64_t ideal;     // dim J_degree
    std::uint64_t quotient;  // dim of the quotient level
    bool skipped = false;    // resource cap hit at this degree
};

// Everything one tool invocation reports: configuration echo, per-check
// results, and the quotient dimension table. The machine rendering contains
// no timing, so identical inputs and flags produce byte-identical output;
// the text rendering includes timings for humans.
struct ReportDocument {
    std::string input_path;
    std::string input_digest;
    int dim = 0;
    std::string q_mode;  // "none", "symbolic", or the exact value
    int max_degree = 0;
    std::size_t ambient_cap = 0;
    std::size_t word_cap = 0;
    bool strict = false;
    std::vector<CheckReport> checks;
    std::vector<DimRow> dims;

    // "pass" when every non-skipped check passes, "fail" when any check
    // fails, "skipped" when nothing failed but something was skipped.
    std::string overall() const {
        bool any_skip = false;
        for (const CheckReport& c : checks) {
            if (c.failed()) return "fail";
            if (c.skipped()) any_skip = true;
        }
        return any_skip ? "skipped" : "pass";
    }

    int exit_code() const {
        std::string o = overall();
        if (o == "fail") return 1;
        if (strict)
            for (const CheckReport& c : checks)
                if (c.verdict == Verdict::skipped_resource) return 3;
        return 0;
    }

    nlohmann::json machine() const {
        nlohmann::json doc;
        doc["report-version"] = kReportVersion;
        doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
        doc["input"] = {{"path", input_path}, {"digest", input_digest}, {"dim", dim}};
        doc["config"] = {{"q", q_mode},
                         {"max-degree", max_degree},
                         {"ambient-cap", ambient_cap},
                         {"word-cap", word_cap},
                         {"strict", strict}};
        if (q_mode == "symbolic")
            doc["config"]["q-semantics"] =
                "verdicts hold identically in q; a pass covers all but finitely many "
                "rational values, not necessarily every specialization";
        doc["checks"] = nlohmann::json::array();
        for (const CheckReport& c : checks) doc["checks"].push_back(check_json(c));
        if (!dims.empty()) {
            doc["dimensions"] = nlohmann::json::array();
            for (const DimRow& r : dims) {
                nlohmann::json row{{"degree", r.degree}};
                if (r.skipped) {
                    row["skipped"] = true;
                } else {
                    row["full"] = r.full;
                    row["ideal"] = r.ideal;
                    row["quotient"] = r.quotient;
                }
                doc["dimensions"].push_back(row);
            }
        }
        doc["overall"] = overall();
        return doc;
    }

    static nlohmann::json check_json(const CheckReport& c) {
        nlohmann::json j;
        j["name"] = c.name;
        j["verdict"] = verdict_str(c.verdict);
        if (!c.skip_reason.empty()) j["skip-reason"] = c.skip_reason;
        if (!c.params.empty()) {
            nlohmann::json p;
            for (const auto& [k, v] : c.params) p[k] = v;
            j["params"] = p;
        }
        if (!c.details.empty()) {
            nlohmann::json d;
            for (const auto& [k, v] : c.details) d[k] = v;
            j["details"] = d;
        }
        if (!c.witness.empty()) {
            nlohmann::json w;
            if (!c.witness.description.empty()) w["description"] = c.witness.description;
            if (!c.witness.attrs.empty()) {
                nlohmann::json a;
                for (const auto& [k, v] : c.witness.attrs) a[k] = v;
                w["attrs"] = a;
            }
            if (c.witness.input) w["input"] = tensor_json(*c.witness.input);
            if (c.witness.residual) w["residual"] = tensor_json(*c.witness.residual);
            if (!c.witness.solution.empty()) {
                nlohmann::json s = nlohmann::json::array();
                for (const auto& [word, value] : c.witness.solution)
                    s.push_back({{"word", word}, {"value", tensor_json(value)}});
                w["solution"] = s;
            }
            j["witness"] = w;
        }
        return j;
    }

    static nlohmann::json tensor_json(const Tensor& t) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : t.terms()) {
            nlohmann::json term;
            term["word"] = BasisWord{t.signature(), w}.str();
            term["coeff"] = c.str();
            terms.push_back(term);
        }
        return {{"signature", t.signature().str()}, {"terms", terms}};
    }

    std::string render_machine() const { return machine().dump(2) + "\n"; }

    std::string render_text() const {
        std::ostringstream out;
        out << kToolName << " " << kToolVersion << " report\n";
        out << "input:      " << input_path << "  (" << input_digest << ")\n";
        out << "dim:        " << dim << "\n";
        out << "q:          " << q_mode << "\n";
        out << "max degree: " << max_degree << "\n";
        if (q_mode == "symbolic")
            out << "note:       symbolic verdicts cover all but finitely many rational q;\n"
                   "            specialize with --q to pin down particular values\n";
        out << "\n";
        if (!checks.empty()) {
            std::size_t width = 0;
            for (const CheckReport& c : checks) width = std::max(width, c.name.size());
            for (const CheckReport& c : checks) {
                out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << c.name
                    << std::setw(22) << verdict_str(c.verdict) << std::right << std::fixed
                    << std::setprecision(1) << std::setw(8) << c.millis << " ms\n";
                if (!c.skip_reason.empty()) out << "      reason: " << c.skip_reason << "\n";
                if (c.failed()) {
                    if (!c.witness.description.empty())
                        out << "      " << c.witness.description << "\n";
                    for (const auto& [k, v] : c.witness.attrs)
                        out << "      " << k << " = " << v << "\n";
                    if (c.witness.input)
                        out << "      input:    " << c.witness.input->str() << "\n";
                    if (c.witness.residual)
                        out << "      residual: " << c.witness.residual->str() << "\n";
                }
            }
            out << "\n";
        }
        if (!dims.empty()) {
            out << "  degree    full   ideal   quotient\n";
            for (const DimRow& r : dims) {
                if (r.skipped) {
                    out << "  " << std::setw(6) << r.degree << "    (skipped: over resource cap)\n";
                } else {
                    out << "  " << std::setw(6) << r.degree << "  " << std::setw(6) << r.full
                        << "  " << std::setw(6) << r.ideal << "  " << std::setw(9) << r.quotient
                        << "\n";
                }
            }
            out << "\n";
        }
        out << "overall: " << overall() << "\n";
        return out.str();
    }
};

}  // namespace cwick
