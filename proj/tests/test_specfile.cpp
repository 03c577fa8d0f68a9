#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwick/report.hpp"
#include "cwick/specfile.hpp"
#include "gen.hpp"

using namespace cwick;

namespace {

const char* kHandWritten = R"(cwick-spec 1
# two-dimensional q-deformed example
dim 2
param q
max-degree 3
B 1 1 1 1 1
B 1 2 2 1 q^1
B 2 1 1 2 q^-1
B 2 2 2 2 1
Btilde 1 1 1 1 1
Btilde 1 2 2 1 q^1
Btilde 2 1 1 2 q^-1
Btilde 2 2 2 2 1
C 1 1 1 1 1
C 1 2 2 1 q^-1
C 2 1 1 2 q^1
C 2 2 2 2 1
)";

}  // namespace

TEST_CASE("hand-written file parses to the expected system") {
    SpecFile f = SpecFile::parse(kHandWritten);
    CHECK(f.dim == 2);
    CHECK(f.param_q);
    CHECK(f.max_degree == 3);
    CHECK(f.to_twist_system() == builtin_preset("qdeform", 2));
}

TEST_CASE("presets round trip through text") {
    for (const std::string& name : preset_names()) {
        for (int d : {1, 2, 3}) {
            SpecFile f = SpecFile::from_preset(name, d);
            std::string text = f.serialize();
            SpecFile g = SpecFile::parse(text);
            CHECK(g.serialize() == text);  // byte-identical reserialization
            CHECK(g.to_twist_system() == builtin_preset(name, d));
        }
    }
}

TEST_CASE("specialized systems build from files") {
    SpecFile f = SpecFile::from_preset("qdeform", 2);
    CHECK(f.to_twist_system(Rational(-1)) == builtin_preset("mixed", 2));
    CHECK(f.to_twist_system(Rational(1)) == builtin_preset("boson", 2));
    CHECK_THROWS_AS(f.to_twist_system(Rational(0)), evaluation_pole);
}

TEST_CASE("preset shortcut inside a file") {
    SpecFile f = SpecFile::parse("cwick-spec 1\ndim 3\nparam q\npreset qdeform\n");
    CHECK(f.to_twist_system() == builtin_preset("qdeform", 3));
    CHECK_THROWS_AS(SpecFile::parse("cwick-spec 1\ndim 2\npreset qdeform\n"), parse_error);
    CHECK_THROWS_AS(SpecFile::parse("cwick-spec 1\ndim 2\npreset nosuch\n"), input_error);
    CHECK_THROWS_AS(
        SpecFile::parse("cwick-spec 1\ndim 2\npreset boson\nB 1 1 1 1 1\n"), parse_error);
}

TEST_CASE("structural errors carry line positions") {
    auto line_of = [](const char* text) {
        try {
            SpecFile::parse(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("dim 2\n") == 1);                                   // missing header
    CHECK(line_of("cwick-spec 1\ndim 2\nwhat 3\n") == 3);             // unknown key
    CHECK(line_of("cwick-spec 1\ndim 2\ndim 2\n") == 3);              // duplicate key
    CHECK(line_of("cwick-spec 1\ndim 2\nB 1 1 1 1\n") == 3);          // missing coefficient
    CHECK(line_of("cwick-spec 1\ndim 2\nB 1 1 1 1 1\nB 1 1 1 1 2\n") == 4);  // duplicate entry
    CHECK(line_of("cwick-spec 1\ndim 2\nparam p\n") == 3);            // unsupported parameter
    CHECK(line_of("cwick-spec 1\nB 1 1 1 1 1\n") > 0);                // missing dim
}

TEST_CASE("coefficient errors point into the right line") {
    try {
        SpecFile::parse("cwick-spec 1\ndim 2\nB 1 1 1 1 q^\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 11);
    }
    // q without the parameter declaration is positioned too
    try {
        SpecFile::parse("cwick-spec 1\ndim 2\nB 1 1 1 1 q\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("semantic index validation identifies the entry") {
    try {
        SpecFile::parse("cwick-spec 1\ndim 2\nB 1 3 3 1 1\n");
        CHECK(false);
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("(1,3,3,1)") != std::string::npos);
    }
}

TEST_CASE("random systems survive a text round trip") {
    gen::Rng rng(801);
    auto collect = [](const TwoSlotMap& m) {
        std::vector<TwistEntry> out;
        for (const auto& [in, col] : m.columns())
            for (const auto& [ow, coeff] : col)
                out.push_back({in[0], in[1], ow[0], ow[1], coeff});
        return out;
    };
    for (int iter = 0; iter < 25; ++iter) {
        int d = gen::pick(rng, 1, 3);
        TwistSystem ts = gen::random_system(rng, d, 2);
        SpecFile f;
        f.dim = d;
        f.param_q = true;
        f.b = collect(ts.B);
        f.btilde = collect(ts.Btilde);
        f.c = collect(ts.C);
        SpecFile g = SpecFile::parse(f.serialize());
        CHECK(g.to_twist_system() == ts);
        CHECK(g.serialize() == f.serialize());
    }
}

TEST_CASE("content digest is stable and input-sensitive") {
    std::string text = SpecFile::from_preset("boson", 2).serialize();
    CHECK(content_digest(text) == content_digest(text));
    CHECK(content_digest(text) != content_digest(text + " "));
    CHECK(content_digest("").size() > 8);
}

TEST_CASE("report documents render deterministically") {
    TwistSystem ts = builtin_preset("qdeform", 2);
    auto make_doc = [&] {
        ReportDocument doc;
        doc.input_path = "x.spec";
        doc.input_digest = content_digest("x");
        doc.dim = 2;
        doc.q_mode = "symbolic";
        doc.max_degree = 3;
        doc.ambient_cap = 100000;
        doc.word_cap = 8;
        doc.checks = run_all_checks(ts, {.max_degree = 3});
        return doc.render_machine();
    };
    std::string a = make_doc();
    std::string b = make_doc();
    CHECK(a == b);  // byte-identical despite fresh timings
    CHECK(a.find("\"overall\": \"pass\"") != std::string::npos);
    // symbolic runs state their quantifier semantics in the report
    CHECK(a.find("q-semantics") != std::string::npos);
    CHECK(a.find("finitely many") != std::string::npos);
}

TEST_CASE("exit codes follow the verdict table") {
    ReportDocument doc;
    doc.checks.push_back({"x", Verdict::pass, {}, {}, "", {}, 0.0});
    CHECK(doc.overall() == "pass");
    CHECK(doc.exit_code() == 0);

    doc.checks.push_back({"y", Verdict::skipped_resource, {}, {}, "cap", {}, 0.0});
    CHECK(doc.overall() == "skipped");
    CHECK(doc.exit_code() == 0);
    doc.strict = true;
    CHECK(doc.exit_code() == 3);

    doc.checks.push_back({"z", Verdict::fail, {}, {}, "", {}, 0.0});
    CHECK(doc.overall() == "fail");
    CHECK(doc.exit_code() == 1);
}
