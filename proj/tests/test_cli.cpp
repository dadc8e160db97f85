#include <filesystem>
#include <fstream>
#include <sstream>

#include "cbsteiner/cli.hpp"
#include "cbsteiner/report.hpp"
#include "doctest.h"

using namespace cbsteiner;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "steiner");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "cbsteiner_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
}

const char* kFourPositions = "cbg 4 4\ny 1 1 2\ny 2 1 3\ny 3 2 4\ny 4 3 4\n";

}  // namespace

TEST_CASE("solve and oracle on the four-position instance") {
    const auto path = write_temp("four.cbg", kFourPositions);
    auto s = invoke({"solve", "--graph", path, "--terminals", "all-x"});
    REQUIRE(s.code == kExitOk);
    const auto js = s.json();
    CHECK(js["command"][1] == "solve");
    CHECK(js["status"] == 0);
    CHECK(js["result"]["size"] == 2);
    CHECK(js["digest"].get<std::string>().size() == 16);

    auto o = invoke({"oracle", "--graph", path, "--terminals", "all-x"});
    REQUIRE(o.code == kExitOk);
    CHECK(o.json()["oracle"]["optimum"] == 2);

    auto c = invoke({"solve", "--graph", path, "--terminals", "y1,y4", "--oracle"});
    REQUIRE(c.code == kExitOk);
    CHECK(c.json()["result"]["size"] == c.json()["oracle"]["optimum"]);
}

TEST_CASE("table dump formats") {
    const auto path = write_temp("chain.cbg", "cbg 7 6\ny 1 1 2\ny 2 2 3\ny 3 3 4\ny 4 4 5\ny 5 5 6\ny 6 2 7\nt y 1 3 5\n");
    auto j = invoke({"solve", "--graph", path, "--method", "table-dp", "--dump-table"});
    REQUIRE(j.code == kExitOk);
    CHECK(j.json()["table"]["class"] == "E3");
    auto t = invoke({"solve", "--graph", path, "--dump-table", "--format", "tsv"});
    CHECK(t.code == kExitOk);
    CHECK(t.out.find('\t') != std::string::npos);
}

TEST_CASE("reference traces replay cleanly and deterministically") {
    auto a = invoke({"paper-traces"});
    auto b = invoke({"paper-traces"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    for (const auto& fixture : a.json()["fixtures"]) CHECK(fixture["diffs"].empty());
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
    CHECK(invoke({"solve"}).code == kExitUsage);

    const auto bad = write_temp("bad.cbg", "cbg 3 1\ny 1 3 2\n");
    auto p = invoke({"solve", "--graph", bad, "--terminals", "all-x"});
    CHECK(p.code == kExitParse);
    CHECK(p.json()["status"] == kExitParse);
    CHECK(p.json()["error"]["line"] == 2);
    CHECK(p.json()["error"]["column"] == 5);

    const auto disc = write_temp("disc.cbg", "cbg 3 2\ny 1 1 1\ny 2 3 3\n");
    CHECK(invoke({"solve", "--graph", disc, "--terminals", "all-x"}).code == kExitInvalid);
    CHECK(invoke({"validate", "--graph", disc}).code == kExitInvalid);

    const auto path = write_temp("four2.cbg", kFourPositions);
    CHECK(invoke({"solve", "--graph", path, "--terminals", "x9"}).code == kExitInvalid);

    std::string big = "g 42 41\n";
    for (int v = 1; v < 42; ++v) big += "e " + std::to_string(v) + " " + std::to_string(v + 1) + "\n";
    const auto large = write_temp("path.g", big);
    CHECK(invoke({"oracle", "--graph", large, "--terminals", "1,42"}).code == kExitOracleScale);
}

TEST_CASE("gen is seeded and round-trips through validate") {
    const auto out = (std::filesystem::temp_directory_path() / "cbsteiner_cli_tests" / "gen.cbg").string();
    auto a = invoke({"gen", "--kind", "cbg", "--m", "6", "--n", "5", "--seed", "7", "--case", "subset_y", "--raw"});
    auto b = invoke({"gen", "--kind", "cbg", "--m", "6", "--n", "5", "--seed", "7", "--case", "subset_y", "--raw"});
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("cbg 6 5", 0) == 0);
    REQUIRE(invoke({"gen", "--kind", "cbg", "--seed", "7", "--output", out}).code == kExitOk);
    auto v = invoke({"validate", "--graph", out});
    CHECK(v.code == kExitOk);
}

TEST_CASE("reductions from the command line") {
    const auto tri = write_temp("tri.g", "g 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    auto vc = invoke({"reduce", "vc", "--graph", tri, "--k", "2", "--oracle"});
    REQUIRE(vc.code == kExitOk);
    CHECK(vc.json()["oracle"]["equal"] == true);

    const auto fam = write_temp("fam.ivl", "ivl 3\nv 1 1 3\nv 2 2 5\nv 3 4 6\n");
    auto iv = invoke({"reduce", "interval", "--graph", fam, "--terminals", "1,3", "--oracle"});
    REQUIRE(iv.code == kExitOk);
    CHECK(iv.json()["steiner_set"] == Json::array({2}));

    const auto two = write_temp("two.cbg", "cbg 3 2\ny 1 1 2\ny 2 2 3\n");
    auto dom = invoke({"reduce", "dominate", "--graph", two, "--oracle"});
    REQUIRE(dom.code == kExitOk);
    CHECK(dom.json()["domination"]["size"] == 3);
}

TEST_CASE("audits enforce their instance counts") {
    CHECK(invoke({"audit", "interval", "--count", "200"}).code == kExitOk);
    CHECK(invoke({"audit", "table-dp", "--count", "30"}).code == kExitOk);
    auto small = invoke({"audit", "oracle-sweep", "--count", "50"});
    CHECK(small.code == kExitInternal);
    CHECK(small.json()["audit"]["pass"] == false);
}
