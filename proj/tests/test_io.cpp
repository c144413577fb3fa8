#include "gaut/cas_export.hpp"
#include "gaut/config_text.hpp"
#include "gaut/errors.hpp"
#include "gaut/problem_input.hpp"
#include "gaut/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <regex>
#include <set>

using namespace gaut;

namespace {

const std::string kExample = std::string(GAUT_DATA_DIR) + "/example_running.toml";

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

ParseError parseFailure(std::string_view text)
{
    try {
        parseInput(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("", 0, 0);
}

} // namespace

TEST_CASE("config text")
{
    ConfigDocument d = parseConfigText("# c\na = 1_000\nb = [\n  [1, -2],\n  [3],\n]\ns = \"x\\\"y\" # tail\n"
                                       "[t]\nflag = true\n");
    CHECK(d.values["a"] == 1000);
    CHECK(d.values["b"][0][1] == -2);
    CHECK(d.values["s"] == "x\"y");
    CHECK(d.values["t"]["flag"] == true);
    CHECK(d.positions.at("t.flag").line == 9);
    CHECK_THROWS_AS(parseConfigText("a = 1\na = 2\n"), ParseError);
    CHECK_THROWS_AS(parseConfigText("[t]\n[t]\n"), ParseError);
    CHECK_THROWS_AS(parseConfigText("a = [1, 2\n"), ParseError);
    CHECK_THROWS_AS(parseConfigText("a = \"open\n"), ParseError);
}

TEST_CASE("problem file")
{
    ProblemInput in = loadInput(kExample);
    CHECK(in.vars == 8);
    CHECK(in.freeRank == 3);
    CHECK(in.torsion == std::vector<std::int64_t>{2});
    CHECK(in.q.size() == 4);
    CHECK(in.ideal.size() == 1);
    CHECK(in.w == std::vector<std::int64_t>{1, 9, 16, 0});
    CHECK(in.idealOf().generators().size() == 1);
    CHECK(in.weight()->toString() == "(1,9,16;0)");

    SUBCASE("round trip")
    {
        CHECK(parseInput(printInput(in)) == in);
        ProblemInput empty = in;
        empty.ideal.clear();
        empty.w.reset();
        empty.mode = FaceMode::UserFaces;
        empty.faces = {{1, 2}, {8}};
        CHECK(parseInput(printInput(empty)) == empty);
    }
    SUBCASE("empty ideal")
    {
        ProblemInput e = parseInput("vars = 1\nQ = [[1]]\nideal = []\n[grading]\nfree_rank = 1\n");
        CHECK(e.ideal.empty());
        CHECK(e.idealOf().generators().empty());
        CHECK_FALSE(e.w.has_value());
    }
}

TEST_CASE("problem file diagnostics")
{
    const std::string grading = "[grading]\nfree_rank = 2\n";
    ParseError rows = parseFailure("vars = 2\nQ = [[1, 0, 1], [0, 1]]\n" + grading);
    CHECK(std::string(rows.what()).find("Q: row 1 has 3 entries, expected 2") != std::string::npos);
    CHECK(rows.line() == 2);

    CHECK(std::string(parseFailure("Q = [[1]]\n[grading]\nfree_rank = 1\n").what()).find("vars") !=
          std::string::npos);
    CHECK(std::string(parseFailure("vars = 2\nQ = [[1, 0]]\n" + grading).what()).find("Q") != std::string::npos);
    CHECK_THROWS_AS(parseInput("vars = 2\nQ = [[1, 0], [0, 1]]\nmode = \"user-faces\"\n" + grading), ParseError);
    CHECK_THROWS_AS(parseInput("vars = 2\nQ = [[1, 0], [0, 1]]\nw = [1]\n" + grading), ParseError);
    CHECK_THROWS_AS(parseInput("vars = 2\nQ = [[1, 0], [0, 1]]\nfaces = [[3]]\n" + grading), ParseError);

    ProblemInput bad = parseInput("vars = 2\nQ = [[1, 0], [0, 1]]\nideal = [\"T(1)*T(\"]\n" + grading);
    try {
        bad.idealOf();
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(loadInput("/nonexistent/problem.toml"), Error);
}

TEST_CASE("integer lists")
{
    CHECK(parseIntegerList("1,9,16,0") == std::vector<std::int64_t>{1, 9, 16, 0});
    CHECK(parseIntegerList("1 -9") == std::vector<std::int64_t>{1, -9});
    CHECK_THROWS_AS(parseIntegerList("1,x"), ParseError);
}

TEST_CASE("report")
{
    ProblemInput in = loadInput(kExample);
    ResultBundle b = runStage(in, Stage::AutXhat);
    CHECK(b.hasPresentation);
    CHECK(b.hasStabilizer);
    CHECK(b.n == 8);
    CHECK(b.weightAutomorphisms.size() == 4);
    CHECK(b.actionVariableWeights.size() == 65);
    REQUIRE(b.xhat.has_value());
    CHECK(b.xhat->retained == std::vector<std::size_t>{1});
    CHECK(b.triples.size() == 1);
    CHECK(b.timingSeconds.empty());

    SUBCASE("json round trip")
    {
        CHECK(fromJson(toJson(b)) == b);
        auto path = std::filesystem::temp_directory_path() / "gaut_report_roundtrip.json";
        writeReport(b, path.string());
        CHECK(readReport(path.string()) == b);
        std::filesystem::remove(path);
    }
    SUBCASE("schema version")
    {
        auto j = toJson(b);
        j["schema_version"] = kReportSchemaVersion + 1;
        CHECK_THROWS_AS(fromJson(nlohmann::ordered_json::object()), Error);
        CHECK_THROWS_AS(fromJson(j), Error);
    }
    SUBCASE("deterministic text")
    {
        CHECK(reportText(runStage(in, Stage::AutXhat)) == reportText(b));
        RunOptions o;
        o.jobs = 4;
        CHECK(reportText(runStage(in, Stage::AutXhat, o)) == reportText(b));
    }
    SUBCASE("earlier stages")
    {
        ResultBundle c = runStage(in, Stage::Check);
        CHECK_FALSE(c.hasPresentation);
        CHECK(c.validation.effective);
        CHECK(c.validation.pointed);
        CHECK(runStage(in, Stage::WeightsAut).weightAutomorphisms.size() == 4);
        ResultBundle ks = runStage(in, Stage::AutKS);
        CHECK(ks.triples.size() == 4);
        CHECK_FALSE(ks.hasStabilizer);
    }
}

TEST_CASE("CAS export")
{
    ProblemInput in = loadInput(kExample);
    ResultBundle b = runStage(in, Stage::AutGradAlg);
    REQUIRE(b.triples.size() == 4);

    for (const auto& dialect : casDialects()) {
        CAPTURE(dialect);
        std::string script = exportCasScript(b, dialect);
        CHECK(lintCasScript(script, dialect, 8).empty());
        CHECK(exportCasScript(b, dialect) == script);
        for (const auto& g : b.triples[1].stabilizer) {
            std::string printed = g;
            if (dialect == "macaulay2-like")
                printed = std::regex_replace(printed, std::regex("Y\\(([0-9]+)\\)"), "Y_$1");
            CHECK(script.find(printed) != std::string::npos);
        }
    }

    std::string singular = exportCasScript(b, "singular-like");
    CHECK(singular.find("ring Sprime = 0,(Y(1..64),Z),dp;") != std::string::npos);
    CHECK(count(singular, "ideal J") == 5);
    CHECK(singular.find("intersect(J1, J2, J3, J4)") != std::string::npos);
    CHECK(singular.find("absPrimdecGTZ(J)") != std::string::npos);

    std::string m2 = exportCasScript(b, "macaulay2-like");
    CHECK(m2.find("Sprime = QQ[Y_1..Y_64, Z];") != std::string::npos);
    CHECK(count(m2, "= ideal(") == 4);
    CHECK(m2.find("decompose") != std::string::npos);
    // every referenced variable lies in the declared range
    std::regex var("Y_([0-9]+)");
    std::set<int> used;
    for (auto it = std::sregex_iterator(m2.begin(), m2.end(), var); it != std::sregex_iterator(); ++it)
        used.insert(std::stoi((*it)[1]));
    CHECK(*used.begin() >= 1);
    CHECK(*used.rbegin() <= 64);

    SUBCASE("no triples")
    {
        ResultBundle e = b;
        e.triples.clear();
        std::string s = exportCasScript(e, "singular-like");
        CHECK(s.find("ring Sprime") != std::string::npos);
        CHECK(s.find("ideal") == std::string::npos);
        CHECK(lintCasScript(s, "singular-like", 8).empty());
    }
    SUBCASE("refusals")
    {
        CHECK_THROWS_AS(exportCasScript(b, "maple"), StructuralError);
        CHECK_THROWS_AS(exportCasScript(runStage(in, Stage::Check), "singular-like"), ValidationError);
    }
    SUBCASE("lint finds damage")
    {
        std::string s = exportCasScript(b, "singular-like");
        s.erase(s.find(')'), 1);
        CHECK_FALSE(lintCasScript(s, "singular-like", 8).empty());
        std::string t = exportCasScript(b, "singular-like");
        t.replace(t.find("Y(13)"), 5, "Y(99)");
        CHECK_FALSE(lintCasScript(t, "singular-like", 8).empty());
    }
}
