#include <random>

#include "cbsteiner/errors.hpp"
#include "cbsteiner/fixtures.hpp"
#include "cbsteiner/generators.hpp"
#include "cbsteiner/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cbsteiner;
using cbsteiner::test::small_graph;

namespace {

// Same instance with comments, blank lines and extra spaces. The vertex block
// after the header is shuffled when `shuffle` is set; edge order is part of a
// 'g' instance and terminal lines must follow the block.
std::string noisy(const std::string& text, std::mt19937_64& rng, bool shuffle = true) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    auto block_end = lines.begin() + 1;
    while (block_end != lines.end() && block_end->rfind("t ", 0) != 0) ++block_end;
    if (shuffle) std::shuffle(lines.begin() + 1, block_end, rng);
    std::string out = "# generated\n" + lines.front() + "   # header\n\n";
    for (const auto& line : lines) {
        if (&line == &lines.front()) continue;
        std::string spaced;
        for (char c : line) spaced += c == ' ' ? std::string("  ") : std::string(1, c);
        out += "  " + spaced + "\n";
    }
    return out;
}

int error_line(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse examples") {
    const auto cbg = parse_cbg("cbg 3 2\ny 1 1 2\ny 2 2 3");
    CHECK(cbg.graph.m() == 3);
    CHECK(cbg.graph.interval(1) == Interval{1, 2});
    CHECK(cbg.graph.interval(2) == Interval{2, 3});
    CHECK(cbg.terminals.empty());

    const auto ivl = parse_ivl("ivl 2\nv 1 1 3\nv 2 2 5\n");
    CHECK(ivl.size() == 2);
    CHECK(ivl.interval(2) == Interval{2, 5});

    const auto g = parse_general("g 3 2\ne 1 2\ne 2 3\nt v 1 3\n");
    CHECK(g.graph.edge_count() == 2);
    CHECK(g.terminals == std::vector<int>{1, 3});
    CHECK_FALSE(g.caterpillar.has_value());

    const auto withr = parse_cbg("cbg 4 2 # two\ny 2 3 4\ny 1 1 3\nt x 4 1\nt y 2\n");
    CHECK(withr.terminals == make_vertex_set({xv(1), xv(4), yv(2)}));
    CHECK(std::holds_alternative<IntervalGraphModel>(parse_instance("ivl 1\nv 1 4 4")));
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_instance("cbg 3 1\ny 1 3 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK(error_line("cbg 3 2\ny 1 1 2\ny 1 2 3\n") == 3);
    CHECK(error_line("cbg 3 2\ny 1 1 2\n") == 2);
    CHECK(error_line("cbg 3 x\n") == 1);
    CHECK(error_line("\n\nfoo 1\n") == 3);
    CHECK(error_line("g 2 1\ne 1 1\n") == 2);
    CHECK(error_line("g 3 2\ne 1 2\ne 2 1\n") == 3);
    CHECK(error_line("") == 1);
    CHECK_THROWS_AS(parse_instance("cbg 3 2\ny 1 1 1\ny 2 3 3\n"), DisconnectedGraph);
    CHECK(error_line("cbg 3 1\ny 1 1 4\n") == 2);
    CHECK_THROWS_AS(parse_cbg("ivl 1\nv 1 1 1\n"), ParseError);
}

TEST_CASE("caterpillar sidecar round trip") {
    const auto parsed = parse_general("g 4 2\ne 1 3\ne 2 4\ncat 1\nbb 1 2\npd 2 4\npd 1 3\n");
    REQUIRE(parsed.caterpillar.has_value());
    CHECK(parsed.caterpillar->k == 1);
    CHECK(parsed.caterpillar->backbone == std::vector<int>{1, 2});
    CHECK(parsed.caterpillar->pendants.at(2) == std::vector<int>{4});
    const auto text = serialize(parsed);
    CHECK(serialize(parse_instance(text)) == text);
}

TEST_CASE("serialize and parse round trip on random instances") {
    std::mt19937_64 rng(3);
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto g = small_graph(s);
        const auto spec = gen_terminals(g, TerminalCase::Mixed, s);
        const CbgInstance cbg{g, spec.terminals};
        const auto text = serialize(cbg);
        CHECK(serialize(parse_instance(text)) == text);
        CHECK(canonical_form(noisy(text, rng)) == text);

        const auto fam = gen_interval_family(GenConfig{s, 3 + static_cast<int>(s % 10), 1 + static_cast<int>(s % 7), 0.4, true});
        const auto itext = serialize(fam);
        CHECK(serialize(parse_instance(itext)) == itext);
        CHECK(canonical_form(noisy(itext, rng)) == itext);

        const GeneralInstance gi{gen_general_graph(s, 2 + static_cast<int>(s % 8), 0.4), {1, 2}, std::nullopt};
        const auto gtext = serialize(gi);
        CHECK(serialize(parse_instance(gtext)) == gtext);
        CHECK(canonical_form(noisy(gtext, rng, false)) == gtext);
    }
}

TEST_CASE("digest is stable and sensitive") {
    const auto a = canonical_form("cbg 3 2\ny 1 1 2\ny 2 2 3");
    const auto b = canonical_form("# c\ncbg 3 2\ny 2 2 3\ny 1 1 2\n");
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(instance_digest(a).size() == 16);
    CHECK(instance_digest(a) != instance_digest(canonical_form("cbg 3 2\ny 1 1 3\ny 2 2 3")));
}

TEST_CASE("terminal and id lists") {
    const auto g = all_x_fixture();
    CHECK(parse_terminal_list(g, "all-x") == make_vertex_set({xv(1), xv(2), xv(3), xv(4)}));
    CHECK(parse_terminal_list(g, "all-y").size() == 4);
    CHECK(parse_terminal_list(g, "all").size() == 8);
    CHECK(parse_terminal_list(g, "y4,x1") == make_vertex_set({xv(1), yv(4)}));
    CHECK_THROWS_AS(parse_terminal_list(g, "x9"), InvalidInput);
    CHECK_THROWS_AS(parse_terminal_list(g, "x1,x1"), InvalidInput);
    CHECK_THROWS_AS(parse_terminal_list(g, "z1"), InvalidInput);
    CHECK_THROWS_AS(parse_terminal_list(g, ""), InvalidInput);

    CHECK(parse_id_list("all", 3) == std::vector<int>{1, 2, 3});
    CHECK(parse_id_list("3,1", 5) == std::vector<int>{1, 3});
    CHECK(parse_id_list("v2,v4", 5) == std::vector<int>{2, 4});
    CHECK_THROWS_AS(parse_id_list("6", 5), InvalidInput);
    CHECK_THROWS_AS(parse_id_list("1,1", 5), InvalidInput);
}

TEST_CASE("caterpillar view puts caterpillar vertices on X") {
    GeneralInstance inst{GeneralGraph(4, {{1, 3}, {1, 4}, {2, 3}}), {}, CaterpillarStructure{0, {3, 4}, {}}};
    const auto view = caterpillar_view(inst);
    CHECK(view.graph.x_count() == 2);
    CHECK(view.graph.y_count() == 2);
    CHECK(view.structure.backbone == std::vector<int>{1, 2});

    GeneralInstance bad{GeneralGraph(3, {{1, 2}, {2, 3}}), {}, CaterpillarStructure{0, {1, 2}, {}}};
    CHECK_THROWS_AS(caterpillar_view(bad), InvalidInput);
    GeneralInstance none{GeneralGraph(2, {{1, 2}}), {}, std::nullopt};
    CHECK_THROWS_AS(caterpillar_view(none), InvalidInput);
}
