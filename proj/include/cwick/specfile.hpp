#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cwick/errors.hpp"
#include "cwick/scalar_parser.hpp"
#include "cwick/twist.hpp"

namespace cwick {

// Plain-text description of a twist system. Format (version 1):
//
//   cwick-spec 1
//   # comment
//   dim 2
//   param q            optional: declares that coefficients may use q
//   max-degree 5       optional: default degree bound for checks
//   preset qdeform     optional shortcut, exclusive with entry lines
//   B      i j k l expr
//   Btilde i j k l expr
//   C      i j k l expr
//
// Entry lines give one matrix element each; the trailing expression uses
// the coefficient grammar and may contain spaces. Exact coefficients are
// the point of the format, which is why they are expressions, not floats.
// Unknown keys are rejected. Serialization is canonical: fixed key order,
// entries sorted by (i, j, k, l), coefficients in canonical form, so a
// parse/serialize round trip is byte-identical.
struct SpecFile {
    int version = 1;
    int dim = 0;
    bool param_q = false;
    std::optional<int> max_degree;
    std::optional<std::string> preset;
    std::vector<TwistEntry> b, btilde, c;

    static SpecFile parse(std::string_view text);

    static SpecFile load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw input_error("cannot read spec file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    std::string serialize() const;

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw input_error("cannot write spec file '" + path + "'");
        out << serialize();
        if (!out) throw input_error("failed writing spec file '" + path + "'");
    }

    // Builds the twist system, optionally specializing q to an exact value.
    TwistSystem to_twist_system(const std::optional<Rational>& q_value = std::nullopt) const {
        TwistSystem ts = preset ? builtin_preset(*preset, dim)
                                : make_twist_system(dim, b, btilde, c);
        if (q_value) return specialize(ts, *q_value);
        return ts;
    }

    static SpecFile from_preset(std::string_view name, int d) {
        TwistSystem ts = builtin_preset(name, d);
        SpecFile f;
        f.dim = d;
        f.param_q = name == "qdeform" || name == "qdeform-alt";
        auto collect = [](const TwoSlotMap& m) {
            std::vector<TwistEntry> out;
            for (const auto& [in, col] : m.columns())
                for (const auto& [ow, coeff] : col)
                    out.push_back({in[0], in[1], ow[0], ow[1], coeff});
            return out;
        };
        f.b = collect(ts.B);
        f.btilde = collect(ts.Btilde);
        f.c = collect(ts.C);
        return f;
    }
};

namespace detail {

inline int parse_index_token(const std::string& tok, int line, int col) {
    if (tok.empty()) throw parse_error("expected a basis index", line, col);
    int v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw parse_error("basis index must be a positive integer, got '" + tok + "'",
                              line, col);
        v = v * 10 + (ch - '0');
        if (v > 1000) throw parse_error("basis index out of range", line, col);
    }
    return v;
}

}  // namespace detail

inline SpecFile SpecFile::parse(std::string_view text) {
    SpecFile f;
    bool saw_header = false, saw_dim = false;
    std::set<std::string> seen_keys;
    std::map<std::string, std::set<std::tuple<int, int, int, int>>> seen_entries;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        // tokenize, remembering start columns
        std::vector<std::string> toks;
        std::vector<int> cols;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            toks.emplace_back(line.substr(start, i - start));
            cols.push_back(static_cast<int>(start) + 1);
        }
        if (toks.empty()) continue;

        const std::string& key = toks[0];
        if (!saw_header) {
            if (key != "cwick-spec" || toks.size() != 2 || toks[1] != "1")
                throw parse_error("expected header 'cwick-spec 1'", line_no, cols[0]);
            saw_header = true;
            continue;
        }

        if (key == "dim") {
            if (seen_keys.contains("dim")) throw parse_error("duplicate 'dim'", line_no, cols[0]);
            seen_keys.insert("dim");
            if (toks.size() != 2) throw parse_error("'dim' takes one integer", line_no, cols[0]);
            f.dim = detail::parse_index_token(toks[1], line_no, cols[1]);
            if (f.dim < 1) throw parse_error("dimension must be >= 1", line_no, cols[1]);
            saw_dim = true;
        } else if (key == "param") {
            if (toks.size() != 2 || toks[1] != "q")
                throw parse_error("only 'param q' is supported", line_no, cols[0]);
            f.param_q = true;
        } else if (key == "max-degree") {
            if (toks.size() != 2) throw parse_error("'max-degree' takes one integer", line_no, cols[0]);
            f.max_degree = detail::parse_index_token(toks[1], line_no, cols[1]);
        } else if (key == "preset") {
            if (toks.size() != 2) throw parse_error("'preset' takes one name", line_no, cols[0]);
            f.preset = toks[1];
        } else if (key == "B" || key == "Btilde" || key == "C") {
            if (toks.size() < 6)
                throw parse_error("entry needs four indices and a coefficient", line_no, cols[0]);
            TwistEntry e;
            e.i = detail::parse_index_token(toks[1], line_no, cols[1]);
            e.j = detail::parse_index_token(toks[2], line_no, cols[2]);
            e.k = detail::parse_index_token(toks[3], line_no, cols[3]);
            e.l = detail::parse_index_token(toks[4], line_no, cols[4]);
            if (!seen_entries[key].insert({e.i, e.j, e.k, e.l}).second)
                throw parse_error("duplicate " + key + " entry (" + toks[1] + "," + toks[2] +
                                      "," + toks[3] + "," + toks[4] + ")",
                                  line_no, cols[1]);
            // the coefficient is the raw remainder of the line
            std::string_view expr = line.substr(static_cast<std::size_t>(cols[5] - 1));
            try {
                e.coeff = ScalarParser::parse_all(expr, f.param_q);
            } catch (const parse_error& pe) {
                throw parse_error(pe.raw(), line_no, cols[5] + pe.column() - 1);
            }
            (key == "B" ? f.b : key == "Btilde" ? f.btilde : f.c).push_back(std::move(e));
        } else {
            throw parse_error("unknown key '" + key + "'", line_no, cols[0]);
        }
    }

    if (!saw_header) throw parse_error("missing header 'cwick-spec 1'", line_no, 1);
    if (!saw_dim) throw parse_error("missing 'dim'", line_no, 1);
    if (f.preset && !(f.b.empty() && f.btilde.empty() && f.c.empty()))
        throw parse_error("'preset' excludes explicit entries", line_no, 1);
    if (f.preset) {
        // validates the name and, absent 'param q', the absence of q
        builtin_preset(*f.preset, f.dim);
        if (!f.param_q && (*f.preset == "qdeform" || *f.preset == "qdeform-alt"))
            throw parse_error("preset '" + *f.preset + "' needs 'param q'", line_no, 1);
    }
    for (const auto& [name, entries] :
         {std::pair{"B", &f.b}, {"Btilde", &f.btilde}, {"C", &f.c}})
        for (const TwistEntry& e : *entries)
            for (int idx : {e.i, e.j, e.k, e.l})
                if (idx < 1 || idx > f.dim)
                    throw input_error(std::string(name) + " entry (" + std::to_string(e.i) +
                                      "," + std::to_string(e.j) + "," + std::to_string(e.k) +
                                      "," + std::to_string(e.l) + ") has index " +
                                      std::to_string(idx) + " outside 1.." +
                                      std::to_string(f.dim));
    return f;
}

inline std::string SpecFile::serialize() const {
    std::ostringstream out;
    out << "cwick-spec " << version << "\n";
    out << "dim " << dim << "\n";
    if (param_q) out << "param q\n";
    if (max_degree) out << "max-degree " << *max_degree << "\n";
    if (preset) out << "preset " << *preset << "\n";
    auto dump = [&](const char* name, std::vector<TwistEntry> entries) {
        std::sort(entries.begin(), entries.end(), [](const TwistEntry& a, const TwistEntry& b) {
            return std::tie(a.i, a.j, a.k, a.l) < std::tie(b.i, b.j, b.k, b.l);
        });
        for (const TwistEntry& e : entries)
            out << name << " " << e.i << " " << e.j << " " << e.k << " " << e.l << " "
                << e.coeff.spec_string() << "\n";
    };
    dump("B", b);
    dump("Btilde", btilde);
    dump("C", c);
    return out.str();
}

}  // namespace cwick
