// Command-line front end: check twist systems against the full consistency
// suite, tabulate quotient dimensions, normal-order operator words, and
// write builtin presets as spec files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwick/cwick.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitStrictSkip = 3;

struct CommonOpts {
    std::string spec_path;
    int max_degree = -1;  // -1: take the file's value or the default 4
    std::string q = "symbolic";
    std::string format = "text";
    bool strict = false;
    std::size_t ambient_cap = 0;  // 0: environment override or 100000
    std::string out_path;
};

std::size_t default_ambient_cap() {
    if (const char* env = std::getenv("CWICK_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "warning: ignoring invalid CWICK_CAP='" << env << "'\n";
    }
    return 100000;
}

struct LoadedSpec {
    std::string bytes;
    cwick::SpecFile file;
    std::optional<cwick::Rational> q_value;
    std::string q_mode;
    std::optional<cwick::TwistSystem> system;
    int max_degree = 4;

    explicit LoadedSpec(const CommonOpts& opt) {
        std::ifstream in(opt.spec_path, std::ios::binary);
        if (!in) throw cwick::input_error("cannot read spec file '" + opt.spec_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        bytes = buf.str();
        file = cwick::SpecFile::parse(bytes);
        if (opt.q == "symbolic") {
            q_mode = file.param_q ? "symbolic" : "none";
        } else {
            q_value = cwick::Rational::from_string(opt.q);
            q_mode = q_value->str();
        }
        system = file.to_twist_system(q_value);
        max_degree = opt.max_degree > 0 ? opt.max_degree : file.max_degree.value_or(4);
        // deep checks build words two slots past the degree bound, plus the
        // dual prefix; keep the word cap clear of that
        cwick::set_max_word_length(
            std::max<std::size_t>(8, static_cast<std::size_t>(max_degree) + 3));
    }
};

void emit(const CommonOpts& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw cwick::input_error("cannot write '" + opt.out_path + "'");
    out << payload;
}

cwick::ReportDocument base_document(const CommonOpts& opt, const LoadedSpec& spec) {
    cwick::ReportDocument doc;
    doc.input_path = opt.spec_path;
    doc.input_digest = cwick::content_digest(spec.bytes);
    doc.dim = spec.file.dim;
    doc.q_mode = spec.q_mode;
    doc.max_degree = spec.max_degree;
    doc.ambient_cap = opt.ambient_cap;
    doc.word_cap = cwick::max_word_length();
    doc.strict = opt.strict;
    return doc;
}

void fill_dimension_table(cwick::ReportDocument& doc, cwick::QuotientSpace& quo,
                          int max_degree) {
    for (int n = 1; n <= max_degree; ++n) {
        cwick::DimRow row{n, 0, 0, 0, false};
        try {
            row.full = quo.full_dim(static_cast<std::size_t>(n));
            row.ideal = quo.ideal_level(static_cast<std::size_t>(n)).dim();
            row.quotient = quo.quotient_dim(static_cast<std::size_t>(n));
        } catch (const cwick::resource_error&) {
            row.skipped = true;
        }
        doc.dims.push_back(row);
    }
}

int run_check(const CommonOpts& opt) {
    LoadedSpec spec(opt);
    cwick::CheckRunner runner(*spec.system,
                              {.max_degree = spec.max_degree, .ambient_cap = opt.ambient_cap});
    cwick::ReportDocument doc = base_document(opt, spec);
    doc.checks = runner.run_all();
    fill_dimension_table(doc, runner.quotient(), spec.max_degree);
    emit(opt, opt.format == "machine" ? doc.render_machine() : doc.render_text());
    return doc.exit_code();
}

int run_dims(const CommonOpts& opt) {
    LoadedSpec spec(opt);
    cwick::QuotientSpace quo(*spec.system, opt.ambient_cap);
    cwick::ReportDocument doc = base_document(opt, spec);
    fill_dimension_table(doc, quo, spec.max_degree);
    emit(opt, opt.format == "machine" ? doc.render_machine() : doc.render_text());
    if (opt.strict)
        for (const cwick::DimRow& r : doc.dims)
            if (r.skipped) return kExitStrictSkip;
    return kExitOk;
}

int run_normal_order(const CommonOpts& opt, const std::string& word_text) {
    LoadedSpec spec(opt);
    cwick::OpWord word =
        cwick::parse_op_word(word_text, spec.file.dim, spec.q_mode == "symbolic");
    cwick::OpWord normal = cwick::normal_order(*spec.system, word);
    cwick::Scalar vac = normal.coeff({});

    if (opt.format == "machine") {
        nlohmann::json doc;
        doc["report-version"] = cwick::kReportVersion;
        doc["tool"] = {{"name", cwick::kToolName}, {"version", cwick::kToolVersion}};
        doc["input"] = {{"path", opt.spec_path},
                        {"digest", cwick::content_digest(spec.bytes)},
                        {"word", word_text}};
        doc["config"] = {{"q", spec.q_mode}};
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [s, c] : normal.terms()) {
            std::string w;
            for (const auto& sym : s) {
                if (!w.empty()) w += ' ';
                w += sym.str();
            }
            terms.push_back({{"word", w}, {"coeff", c.str()}});
        }
        doc["normal-form"] = terms;
        doc["vacuum-expectation"] = vac.str();
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "input:              " << word.str() << "\n";
        out << "normal form:        " << normal.str() << "\n";
        out << "vacuum expectation: " << vac.str() << "\n";
        emit(opt, out.str());
    }
    return kExitOk;
}

int run_preset(const std::string& name, int d, const std::string& out_path) {
    cwick::SpecFile file = cwick::SpecFile::from_preset(name, d);
    if (out_path == "-") {
        std::cout << file.serialize();
        return kExitOk;
    }
    file.save(out_path);
    std::cout << "wrote preset '" << name << "' (dim " << d << ") to " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of twisted Wick algebras"};
    app.set_version_flag("--version", std::string(cwick::kToolName) + " " +
                                          cwick::kToolVersion);
    app.require_subcommand(1);

    CommonOpts opt;
    std::string word_text, preset_name, preset_out;
    int preset_dim = 0;

    auto add_common = [&](CLI::App* cmd, bool with_degree = true) {
        cmd->add_option("spec", opt.spec_path, "twist system spec file")->required();
        if (with_degree)
            cmd->add_option("--max-degree", opt.max_degree,
                            "degree bound for checks (default: file setting or 4)");
        cmd->add_option("--q", opt.q, "'symbolic' or an exact rational value for q")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "output format: text or machine")
            ->check(CLI::IsMember({"text", "machine"}))
            ->capture_default_str();
        cmd->add_option("--cap", opt.ambient_cap,
                        "ambient dimension cap (default: CWICK_CAP or 100000)");
        cmd->add_option("-o,--output", opt.out_path, "write the report to a file");
        cmd->add_flag("--strict", opt.strict, "exit 3 when a resource skip occurs");
    };

    CLI::App* check = app.add_subcommand("check", "run the full consistency check suite");
    add_common(check);

    CLI::App* dims = app.add_subcommand("dims", "tabulate quotient dimensions per degree");
    add_common(dims);

    CLI::App* norm =
        app.add_subcommand("normal-order", "normal-order an operator word");
    add_common(norm, false);
    norm->add_option("word", word_text, "operator word, e.g. \"a1 A1\"")->required();

    CLI::App* preset = app.add_subcommand("preset", "write a builtin preset as a spec file");
    preset->add_option("name", preset_name, "boson|fermion|mixed|qdeform|qdeform-alt")
        ->required();
    preset->add_option("dim", preset_dim, "space dimension (>= 1)")->required();
    preset->add_option("output", preset_out, "output path, or '-' for stdout")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.ambient_cap == 0) opt.ambient_cap = default_ambient_cap();
        if (app.got_subcommand(preset)) return run_preset(preset_name, preset_dim, preset_out);
        if (app.got_subcommand(check)) return run_check(opt);
        if (app.got_subcommand(dims)) return run_dims(opt);
        if (app.got_subcommand(norm)) return run_normal_order(opt, word_text);
    } catch (const cwick::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cwick::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cwick::evaluation_pole& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cwick::division_by_zero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cwick::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStrictSkip;
    } catch (const cwick::error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
