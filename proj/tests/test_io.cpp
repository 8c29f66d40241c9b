#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>

#include "support/support.hpp"
#include "tpa/cli.hpp"

using namespace tpa;
using json = nlohmann::json;
using test::example3;
using test::example3_M;
using test::fixture_path;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::initializer_list<std::string> args) {
    std::vector<std::string> hold{"tpa"};
    hold.insert(hold.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : hold) argv.push_back(s.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Writes text to a throwaway file and removes it on scope exit.
struct TempFile {
    std::filesystem::path path;

    TempFile(const std::string& stem, const std::string& text) {
        path = std::filesystem::temp_directory_path() /
               ("tpa_test_" + std::to_string(::getpid()) + "_" + stem);
        std::ofstream(path) << text;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("quiver documents parse and round-trip") {
    TruncatedAlgebra alg = example3();
    CHECK(alg.quiver.name() == "example3");
    CHECK(alg.L == 3);
    CHECK(alg.quiver.vertex_count() == 15);
    CHECK(alg.quiver.arrow_count() == 23);

    std::string text = emit_quiver(alg);
    TruncatedAlgebra again = parse_quiver(text);
    CHECK(emit_quiver(again) == text);
    CHECK(again.quiver.vertex_count() == alg.quiver.vertex_count());
    CHECK(again.quiver.find_arrow("b7") == alg.quiver.find_arrow("b7"));

    // bare `L <int>` and comments are accepted
    TruncatedAlgebra tiny = parse_quiver("quiver t\nL 2\nvertices a b\n"
                                         "# comment\nx: a -> b # tail\n");
    CHECK(tiny.L == 2);
    CHECK(tiny.quiver.arrow_count() == 1);
}

TEST_CASE("quiver parse errors carry positions") {
    try {
        parse_quiver("L = x\nvertices a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
    try {
        parse_quiver("L = 1\nvertices a\nfoo bar\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("label: source -> target") !=
              std::string::npos);
    }
    try {
        parse_quiver("L = 1 @\nvertices a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 7);
    }

    CHECK_THROWS_AS(parse_quiver("vertices a\n"), Error);   // no L
    CHECK_THROWS_AS(parse_quiver("L = 2\n"), Error);        // no vertices
    CHECK_THROWS_AS(parse_quiver("L = 0\nvertices a\n"), Error);
    CHECK_THROWS_AS(
            parse_quiver("L = 1\nvertices a\nx: a -> a\nx: a -> a\n"), Error);
    CHECK_THROWS_AS(parse_quiver("L = 1\nvertices a\nx: a -> z\n"), Error);
}

TEST_CASE("module documents parse, resolve, and round-trip") {
    ModuleDoc doc = parse_module_doc(test::slurp(fixture_path("example3_M.mod")));
    CHECK(doc.name == "M");
    CHECK(doc.quiver_ref == "example3.tqa");
    CHECK(doc.slot_vertices ==
          std::vector<std::string>{"3", "5", "6", "2", "2"});
    REQUIRE(doc.relations.size() == 14);
    CHECK(doc.relations[0].slot == 1);
    CHECK(doc.relations[0].expr == "b3");
    CHECK(doc.relations[0].line == 5);
    CHECK(doc.relations[0].col == 8);

    TruncatedAlgebra alg = example3();
    MonomialModule M = resolve_module(alg, doc);
    MonomialModule direct = example3_M(alg);
    CHECK(M.slots == direct.slots);
    CHECK(M.relations == direct.relations);

    std::string text = emit_module(M, "M", "example3.tqa");
    MonomialModule again = resolve_module(alg, parse_module_doc(text));
    CHECK(again.slots == M.slots);
    CHECK(again.relations == M.relations);
    CHECK(emit_module(again, "M", "example3.tqa") == text);
}

TEST_CASE("module document errors") {
    TruncatedAlgebra alg = example3();

    CHECK_THROWS_AS(parse_module_doc("slots 3\nbogus line\n"), ParseError);
    CHECK_THROWS_AS(parse_module_doc("module m\n"), Error);  // no slots
    CHECK_THROWS_AS(parse_module_doc("slots 3\nrel 1 b3\n"), ParseError);

    // slot index out of range is reported at the rel line
    try {
        resolve_module(alg, parse_module_doc("slots 3\nrel 2: b3\n"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    CHECK_THROWS_AS(
            resolve_module(alg, parse_module_doc("slots nope\n")), Error);
    // relation must start at its slot vertex
    CHECK_THROWS_AS(
            resolve_module(alg, parse_module_doc("slots 3\nrel 1: a2\n")),
            Error);
}

TEST_CASE("sequence documents parse, resolve, and round-trip") {
    SequenceDoc doc =
            parse_sequence_doc(test::slurp(fixture_path("s_of_Pe1.seq")));
    CHECK(doc.name == "s_of_Pe1");
    CHECK(doc.quiver_ref == "example3.tqa");
    CHECK(doc.first_row_line == 4);
    REQUIRE(doc.rows.size() == 4);
    for (const auto& row : doc.rows) CHECK(row.size() == 15);

    TruncatedAlgebra alg = example3();
    SemisimpleSequence S = resolve_sequence(alg, doc);
    VertexId v1 = alg.quiver.find_vertex("1").value();
    CHECK(S == radical_layering(projective_module(alg, v1)));

    std::string text = emit_sequence(alg, S, "s_of_Pe1", "example3.tqa");
    SemisimpleSequence again = resolve_sequence(alg, parse_sequence_doc(text));
    CHECK(again == S);
    CHECK(emit_sequence(alg, again, "s_of_Pe1", "example3.tqa") == text);

    CHECK_THROWS_AS(parse_sequence_doc("sequence s\n"), Error);  // no rows
    CHECK_THROWS_AS(parse_sequence_doc("1 2\nwhat 3\n"), ParseError);
    // row shape must be (L+1) x n
    CHECK_THROWS_AS(resolve_sequence(alg, parse_sequence_doc("1 0 0\n")),
                    Error);
    SequenceDoc neg;
    neg.rows = doc.rows;
    neg.rows[0][0] = -1;
    CHECK_THROWS_AS(resolve_sequence(alg, neg), Error);
}

TEST_CASE("path expressions") {
    TruncatedAlgebra alg = example3();
    const Quiver& q = alg.quiver;

    Path p = parse_path_expr(alg, "a9*a8*b7");
    CHECK(q.vertex_name(p.source) == "7");
    CHECK(q.vertex_name(p.target) == "10");
    CHECK(p.length() == 3);
    CHECK(parse_path_expr(alg, "b7*a8*a9", /*left_to_right=*/true) == p);

    Path t = parse_path_expr(alg, "7");
    CHECK(t == trivial_path(q.find_vertex("7").value()));

    CHECK_THROWS_AS(parse_path_expr(alg, "nope"), Error);
    CHECK_THROWS_AS(parse_path_expr(alg, "a9**b7"), Error);
    CHECK_THROWS_AS(parse_path_expr(alg, "a9*b7"), Error);  // not composable
    CHECK_THROWS_AS(parse_path_expr(alg, "a1*a1*a1*a1"), Error);  // length > L

    // a lone token that is both a vertex and an arrow reads as the arrow
    TruncatedAlgebra odd = parse_quiver("L = 1\nvertices x y\nx: x -> y\n");
    Path both = parse_path_expr(odd, "x");
    CHECK(both.length() == 1);
}

TEST_CASE("cli analyze") {
    Run human = cli({"analyze", fixture_path("example3.tqa")});
    CHECK(human.code == 0);
    CHECK(human.out.find("finitistic dimension: 4") != std::string::npos);
    CHECK(human.out.find("findim bracket [3, 4]") != std::string::npos);
    CHECK(human.out.find("findim via tree modules: 4") != std::string::npos);

    Run r = cli({"--json", "analyze", fixture_path("example3.tqa")});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "tpa-report/1");
    CHECK(j["command"] == "analyze");
    CHECK(j["quiver"] == "example3");
    CHECK(j["L"] == 3);
    CHECK(j["findim"]["value"] == 4);
    CHECK(j["findim"]["s"] == 3);
    CHECK(j["findim"]["witness"]["vertex"] == "8");
    CHECK(j["findim"]["witness"]["length"] == 1);
    CHECK(j["findim"]["m"] == 7);
    CHECK(j["findim"]["bracket"] == json::array({3, 4}));
    CHECK(j["cyclebound"].size() == 7);
    CHECK(j["vertices"][0]["name"] == "1");
    CHECK(j["vertices"][0]["c"] == "inf");
    CHECK(j["vertices"][7]["c"] == 7);
    CHECK(j["vertices"][7]["cyclebound"] == false);
    CHECK(j["trees"].size() == 15);
    CHECK(j["findim_via_trees"] == 4);

    // reports are deterministic
    Run again = cli({"--json", "analyze", fixture_path("example3.tqa")});
    CHECK(again.out == r.out);
}

TEST_CASE("cli pdim subcommands") {
    Run path = cli({"--json", "pdim", "path", "a9*a8*b7",
                    fixture_path("example3.tqa")});
    REQUIRE(path.code == 0);
    json j = json::parse(path.out);
    CHECK(j["command"] == "pdim-path");
    CHECK(j["path"] == "a9*a8*b7");
    CHECK(j["target"] == "10");
    CHECK(j["c_target"] == 5);
    CHECK(j["pdim"] == 3);

    Run ltr = cli({"--left-to-right", "pdim", "path", "b7*a8*a9",
                   fixture_path("example3.tqa")});
    CHECK(ltr.code == 0);
    CHECK(ltr.out.find("pdim = 3") != std::string::npos);

    Run simple = cli({"pdim", "simple", "8", fixture_path("example3.tqa")});
    CHECK(simple.code == 0);
    CHECK(simple.out.find("vertex 8 = 3") != std::string::npos);

    Run module = cli({"--json", "pdim", "module",
                      fixture_path("example3_M.mod")});
    REQUIRE(module.code == 0);
    json jm = json::parse(module.out);
    CHECK(jm["module"] == "M");
    CHECK(jm["dimension"] == 10);
    CHECK(jm["pdim"] == "inf");

    Run human = cli({"pdim", "module", fixture_path("example3_M.mod")});
    CHECK(human.out.find("pdim = ∞") != std::string::npos);
}

TEST_CASE("cli syzygy") {
    Run r = cli({"--json", "syzygy", fixture_path("example3_M.mod")});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["levels"].size() == 1);
    CHECK(j["levels"][0]["generators"].size() == 14);
    CHECK(j["levels"][0]["generators"][0]["slot"] == 1);
    CHECK(j["levels"][0]["generators"][0]["path"] == "b3");
    CHECK(j["levels"][0]["generators"][0]["target"] == "12");
    CHECK(j["levels"][0]["generators"][0]["pdim"] == 1);

    Run deep = cli({"--json", "syzygy", "--iterate", "3",
                    fixture_path("example3_M.mod")});
    json jd = json::parse(deep.out);
    CHECK(jd["levels"].size() == 3);

    // a projective stops at level 1 with no generators
    TempFile proj("p.mod", "quiver example3.tqa\nslots 1\n");
    Run p = cli({"--json", "syzygy", "--iterate", "5", proj.path.string(),
                 fixture_path("example3.tqa")});
    json jp = json::parse(p.out);
    REQUIRE(jp["levels"].size() == 1);
    CHECK(jp["levels"][0]["generators"].empty());
}

TEST_CASE("cli generic and spectrum") {
    Run gen = cli({"--json", "generic", fixture_path("s_of_Pe1.seq")});
    REQUIRE(gen.code == 0);
    json jg = json::parse(gen.out);
    CHECK(jg["realizable"] == true);
    CHECK(jg["dimension"] == 18);
    CHECK(jg["generic_pdim"] == 0);

    Run spect = cli({"--json", "spectrum", fixture_path("s_of_Pe1.seq")});
    REQUIRE(spect.code == 0);
    json js = json::parse(spect.out);
    CHECK(js["values"] == json::array({0, 2, 3, 4, "inf"}));

    // small stratum: enumeration reproduces the formula spectrum
    TruncatedAlgebra alg = example3();
    VertexId v8 = alg.quiver.find_vertex("8").value();
    TempFile seq("s8.seq",
                 emit_sequence(alg, radical_layering(simple_module(alg, v8)),
                               "s8", "example3.tqa"));
    Run chk = cli({"--json", "spectrum-check", "--cap", "12",
                   seq.path.string(), fixture_path("example3.tqa")});
    REQUIRE(chk.code == 0);
    json jc = json::parse(chk.out);
    CHECK(jc["match"] == true);
    CHECK(jc["sequence_count"] == 1);
    CHECK(jc["enumerated"] == json::array({3}));

    // a sequence with an unfed layer has no stratum
    TempFile badseq("bad.seq", "quiver example3.tqa\n"
                               "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
                               "1 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
                               "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
                               "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
    Run bad = cli({"spectrum", badseq.path.string(),
                   fixture_path("example3.tqa")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("not realizable") != std::string::npos);
}

TEST_CASE("cli oracle") {
    Run r = cli({"--json", "oracle", "--max-depth", "6",
                 fixture_path("Pe7_mod_b7.mod")});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["formula_pdim"] == 4);
    CHECK(j["oracle"]["kind"] == "exact");
    CHECK(j["oracle"]["value"] == 4);
    CHECK(j["match"] == true);
    REQUIRE(j["covers"].size() == 5);
    CHECK(j["covers"][0] == json::array({"7"}));
    CHECK(j["covers"][4] == json::array({"15"}));

    // a depth bound below a finite pdim cannot confirm it: exit 2
    Run shallow = cli({"oracle", "--max-depth", "2",
                       fixture_path("Pe7_mod_b7.mod")});
    CHECK(shallow.code == 2);
    CHECK(shallow.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("cli graph") {
    Run r = cli({"graph", fixture_path("example3_M.mod")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out.find("dashed") != std::string::npos);

    Run j = cli({"--json", "graph", fixture_path("example3_M.mod")});
    json jj = json::parse(j.out);
    CHECK(jj["dot"].get<std::string>().rfind("digraph", 0) == 0);
}

TEST_CASE("cli input handling") {
    Run version = cli({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("tpa 1.0.0") != std::string::npos);

    Run nosub = cli({});
    CHECK(nosub.code == 1);

    Run missing = cli({"analyze", "/nonexistent/q.tqa"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("error:") != std::string::npos);

    Run badext = cli({"analyze", fixture_path("example3.tqa") + ".bak"});
    CHECK(badext.code == 1);

    Run dup = cli({"analyze", fixture_path("example3.tqa"),
                   fixture_path("example3.tqa")});
    CHECK(dup.code == 1);
    CHECK(dup.err.find("more than one") != std::string::npos);

    Run noquiver = cli({"pdim", "simple", "8"});
    CHECK(noquiver.code == 1);
    CHECK(noquiver.err.find("no quiver given") != std::string::npos);

    // parse errors surface as file:line:col
    TempFile broken("broken.tqa", "L = x\nvertices a\n");
    Run parse = cli({"analyze", broken.path.string()});
    CHECK(parse.code == 1);
    CHECK(parse.err.find(":1:5:") != std::string::npos);

    // --quiver beats the positional and embedded references
    TempFile a2("a2.tqa", "quiver a2\nL = 1\nvertices u v\na: u -> v\n");
    Run over = cli({"--quiver", a2.path.string(), "analyze",
                    fixture_path("example3.tqa")});
    CHECK(over.code == 0);
    CHECK(over.out.find("finitistic dimension: 1") != std::string::npos);
}
