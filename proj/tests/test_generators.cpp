#include <map>
#include <set>

#include "cbsteiner/errors.hpp"
#include "cbsteiner/fixtures.hpp"
#include "cbsteiner/generators.hpp"
#include "doctest.h"

using namespace cbsteiner;

TEST_CASE("forced and repeated configurations") {
    CHECK(gen_intervals(GenConfig{42, 1, 1, 0.5, true}) == std::vector<Interval>{{1, 1}});
    const GenConfig cfg{9, 8, 6, 0.4, true};
    CHECK(gen_intervals(cfg) == gen_intervals(cfg));
    CHECK(gen_interval_family(cfg).intersection_graph().edges() ==
          gen_interval_family(cfg).intersection_graph().edges());
    CHECK(gen_general_graph(3, 6, 0.3).edges() == gen_general_graph(3, 6, 0.3).edges());
    CHECK(gen_intervals(GenConfig{1, 8, 6, 0.4, true}) != gen_intervals(GenConfig{2, 8, 6, 0.4, true}));
}

TEST_CASE("generated instances are valid and connected") {
    for (std::uint64_t s = 0; s < 500; ++s) {
        const int m = 1 + static_cast<int>(s % 12);
        const int n = 1 + static_cast<int>(s % 9);
        const double density = 0.05 + 0.95 * static_cast<double>(s % 20) / 19.0;
        const GenConfig cfg{s, m, n, density, true};
        const auto ivs = gen_intervals(cfg);
        CHECK(static_cast<int>(ivs.size()) == n);
        CHECK(validate_convex(m, ivs).ok());

        const auto fam = gen_interval_family(cfg);
        CHECK(fam.size() == n);
        std::vector<int> all;
        for (int v = 1; v <= n; ++v) all.push_back(v);
        CHECK(induced_connected(fam.intersection_graph(), all));

        const auto g = gen_general_graph(s, 2 + static_cast<int>(s % 6), 0.2);
        CHECK(g.edge_count() >= 1);
    }
}

TEST_CASE("generator argument checks") {
    CHECK_THROWS_AS(gen_intervals(GenConfig{1, 0, 3, 0.4, true}), InvalidInput);
    CHECK_THROWS_AS(gen_intervals(GenConfig{1, 3, 0, 0.4, true}), InvalidInput);
    CHECK_THROWS_AS(gen_intervals(GenConfig{1, 3, 3, 0.0, true}), InvalidInput);
    CHECK_THROWS_AS(gen_intervals(GenConfig{1, 3, 3, 1.5, true}), InvalidInput);
    CHECK_THROWS_AS(gen_general_graph(1, 1, 0.5), InvalidInput);
}

TEST_CASE("terminal cases") {
    const auto g = all_x_fixture();
    const auto ax = gen_terminals(g, TerminalCase::AllX, 1);
    CHECK(ax.terminals == make_vertex_set({xv(1), xv(2), xv(3), xv(4)}));

    const ConvexBipartiteGraph one_y(3, {{1, 3}});
    CHECK_THROWS_AS(gen_terminals(one_y, TerminalCase::SubsetY, 1), InfeasibleRequest);
    const ConvexBipartiteGraph one_x(1, {{1, 1}, {1, 1}});
    CHECK_THROWS_AS(gen_terminals(one_x, TerminalCase::SubsetX, 1), InfeasibleRequest);

    const auto mixed = gen_terminals(g, TerminalCase::Mixed, 7);
    bool has_x = false;
    bool has_y = false;
    for (const auto& v : mixed.terminals) (v.side == Side::X ? has_x : has_y) = true;
    CHECK(has_x);
    CHECK(has_y);
}

TEST_CASE("terminal draws cover every case and the full size range") {
    const auto g = gen_convex_bipartite(GenConfig{4, 6, 5, 0.4, true});
    const TerminalCase cases[] = {TerminalCase::AllX, TerminalCase::SubsetX, TerminalCase::AllY,
                                  TerminalCase::SubsetY, TerminalCase::Mixed};
    std::map<TerminalCase, std::set<std::size_t>> sizes;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto tc = cases[s % 5];
        const auto spec = gen_terminals(g, tc, s);
        CHECK(spec.terminal_case == tc);
        CHECK_FALSE(spec.terminals.empty());
        CHECK(std::is_sorted(spec.terminals.begin(), spec.terminals.end()));
        sizes[tc].insert(spec.terminals.size());
    }
    CHECK(sizes.size() == 5);
    CHECK(sizes[TerminalCase::AllX] == std::set<std::size_t>{6});
    CHECK(sizes[TerminalCase::AllY] == std::set<std::size_t>{5});
    CHECK(sizes[TerminalCase::SubsetX] == std::set<std::size_t>{1, 2, 3, 4, 5});
    CHECK(sizes[TerminalCase::SubsetY] == std::set<std::size_t>{1, 2, 3, 4});
    CHECK(*sizes[TerminalCase::Mixed].begin() == 2);
    CHECK(*sizes[TerminalCase::Mixed].rbegin() == 11);
}
