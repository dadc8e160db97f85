#include <algorithm>

#include "cbsteiner/errors.hpp"
#include "cbsteiner/fixtures.hpp"
#include "cbsteiner/generators.hpp"
#include "cbsteiner/greedy.hpp"
#include "cbsteiner/oracle.hpp"
#include "cbsteiner/reductions.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cbsteiner;
using cbsteiner::test::small_graph;
using cbsteiner::test::xs;
using cbsteiner::test::ys;

TEST_CASE("mixed lift adds one pendant per X terminal") {
    const auto g = all_x_fixture();
    const std::vector<int> rx{1, 3};
    const std::vector<int> ry{4};
    const auto lift = lift_mixed_terminals(g, rx, ry);
    CHECK(lift.lifted_graph.m() == g.m());
    CHECK(lift.lifted_graph.n() == g.n() + 2);
    CHECK(lift.pendant_map.at(1) == 5);
    CHECK(lift.pendant_map.at(3) == 6);
    CHECK(lift.lifted_graph.interval(5) == Interval{1, 1});
    CHECK(lift.lifted_graph.interval(6) == Interval{3, 3});
    CHECK(lift.terminals == std::vector<int>{4, 5, 6});
    CHECK(validate_convex(lift.lifted_graph.m(), lift.lifted_graph.intervals()).ok());

    CHECK_THROWS_AS(lift_mixed_terminals(g, std::vector<int>{}, ry), InvalidInput);
    CHECK_THROWS_AS(lift_mixed_terminals(g, std::vector<int>{5}, ry), InvalidInput);
}

TEST_CASE("mixed terminals through the lift") {
    const auto g = all_x_fixture();
    // x1 and y4 share no neighbour: x1 - y2 - x3 - y4 is shortest.
    const std::vector<Vertex> r{xv(1), yv(4)};
    const auto res = solve_general(g, r);
    CHECK(res.terminal_case == TerminalCase::Mixed);
    CHECK(res.size() == 2);
    CHECK(res.method.rfind("lift+", 0) == 0);
    CHECK(min_steiner_brute(g, r).optimum == 2);

    // One X and one Y terminal are at odd distance, so the optimum is 0 or at least 2.
    const std::vector<Vertex> near{xv(1), yv(2)};
    CHECK(solve_general(g, near).steiner_set.empty());
    const std::vector<Vertex> three{xv(1), xv(4), yv(3)};
    CHECK(solve_general(g, three).size() == min_steiner_brute(g, three).optimum);

    CHECK(solve_general(g, std::vector<Vertex>{xv(2)}).steiner_set.empty());
    CHECK(solve_general(g, xs({1, 2, 3, 4})).size() == solve_all_x(g).size());
}

TEST_CASE("dispatcher examples") {
    const auto fx = subset_x_fixture();
    std::vector<Vertex> rx;
    for (int p : subset_x_fixture_terminals()) rx.push_back(xv(p));
    CHECK(solve_general(fx, rx).size() == 8);

    const ConvexBipartiteGraph small(3, {{1, 2}, {2, 3}});
    const std::vector<Vertex> everything{xv(1), xv(2), xv(3), yv(1), yv(2)};
    const auto all = solve_general(small, everything);
    CHECK(all.steiner_set.empty());
    CHECK(all.terminal_case == TerminalCase::Mixed);

    CHECK(solve_general(subset_y_fixture(), ys(subset_y_fixture_terminals())).size() == 4);
    CHECK(classify_terminals(small, xs({1, 2, 3})) == TerminalCase::AllX);
    CHECK(classify_terminals(small, xs({1})) == TerminalCase::SubsetX);
    CHECK(classify_terminals(small, ys({1, 2})) == TerminalCase::AllY);
    CHECK(classify_terminals(small, ys({2})) == TerminalCase::SubsetY);
    CHECK_THROWS_AS(solve_general(small, std::vector<Vertex>{}), InvalidInput);
    CHECK_THROWS_AS(solve_general(small, std::vector<Vertex>{yv(3)}), InvalidInput);
}

TEST_CASE("dispatcher matches the oracle on every terminal case") {
    const TerminalCase cases[] = {TerminalCase::AllX, TerminalCase::SubsetX, TerminalCase::AllY,
                                  TerminalCase::SubsetY, TerminalCase::Mixed};
    int runs = 0;
    for (std::uint64_t s = 0; s < 600; ++s) {
        const auto g = small_graph(s);
        for (auto tc : cases) {
            TerminalSpec spec;
            try {
                spec = gen_terminals(g, tc, s * 5 + static_cast<std::uint64_t>(tc));
            } catch (const InfeasibleRequest&) {
                continue;
            }
            const auto res = solve_general(g, spec.terminals);
            CHECK(res.terminal_case == tc);
            CHECK(res.size() == min_steiner_brute(g, spec.terminals).optimum);
            ++runs;
        }
    }
    CHECK(runs > 2500);
}

TEST_CASE("lift never keeps a pendant and matches the oracle") {
    int runs = 0;
    for (std::uint64_t s = 0; runs < 500; ++s) {
        const auto g = small_graph(s);
        const auto spec = gen_terminals(g, TerminalCase::Mixed, s);
        const auto res = solve_general(g, spec.terminals);
        for (const auto& v : res.steiner_set) CHECK(g.contains(v));
        CHECK(res.size() == min_steiner_brute(g, spec.terminals).optimum);
        ++runs;
    }
}

TEST_CASE("interval image") {
    const IntervalGraphModel fam({{1, 3}, {2, 5}, {4, 6}});
    const auto img = interval_to_convex_bipartite(fam);
    CHECK(img.graph.m() == 6);
    CHECK(img.x_values == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(img.graph.interval(1) == Interval{1, 3});
    CHECK(img.graph.interval(2) == Interval{2, 5});
    CHECK(img.graph.interval(3) == Interval{4, 6});

    const auto one = interval_to_convex_bipartite(IntervalGraphModel({{7, 7}}));
    CHECK(one.graph.m() == 1);
    CHECK(one.graph.interval(1) == Interval{1, 1});

    const auto sparse = interval_to_convex_bipartite(IntervalGraphModel({{10, 40}, {30, 90}}));
    CHECK(sparse.x_values == std::vector<int>{10, 30, 40, 90});
    CHECK(sparse.graph.interval(2) == Interval{2, 4});

    CHECK_THROWS_AS(interval_to_convex_bipartite(IntervalGraphModel({{1, 2}, {4, 5}})), DisconnectedGraph);
    CHECK_THROWS_AS(interval_to_convex_bipartite(IntervalGraphModel({})), InvalidInput);
}

TEST_CASE("interval Steiner examples") {
    const IntervalGraphModel fam({{1, 3}, {2, 5}, {4, 6}});
    CHECK(solve_interval_steiner(fam, std::vector<int>{1, 3}).steiner_set == std::vector<int>{2});
    CHECK(solve_interval_steiner(fam, std::vector<int>{2}).steiner_set.empty());
    CHECK(solve_interval_steiner(fam, std::vector<int>{1, 2, 3}).steiner_set.empty());

    const IntervalGraphModel star({{5, 5}, {1, 5}, {5, 9}, {3, 6}, {5, 7}});
    const auto res = solve_interval_steiner(star, std::vector<int>{2, 3, 4, 5});
    CHECK(res.steiner_set.size() <= 1);
    CHECK_THROWS_AS(solve_interval_steiner(fam, std::vector<int>{}), InvalidInput);
}

TEST_CASE("interval pipeline matches the oracle") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const int n = 1 + static_cast<int>(s % 8);
        const auto fam = gen_interval_family(GenConfig{s + 500, 4 + static_cast<int>(s % 9), n, 0.3, true});
        std::vector<int> r;
        for (int v = 1; v <= n; ++v) {
            if ((s >> (v % 5)) & 1u || v == 1) r.push_back(v);
        }
        const auto res = solve_interval_steiner(fam, r);
        CHECK(res.steiner_set.size() ==
              static_cast<std::size_t>(min_steiner_brute(fam.intersection_graph(), r).optimum));
        auto members = r;
        members.insert(members.end(), res.steiner_set.begin(), res.steiner_set.end());
        CHECK(induced_connected(fam.intersection_graph(), members));
    }
}

TEST_CASE("domination examples") {
    const ConvexBipartiteGraph g(3, {{1, 2}, {2, 3}});
    const auto d = dominating_set_via_stree(g);
    CHECK(d.d1 == ys({1, 2}));
    CHECK(d.d2 == xs({2}));
    CHECK(d.d == make_vertex_set({xv(2), yv(1), yv(2)}));
    CHECK(d.valid);
    CHECK(min_dominating_brute(g).optimum == 2);

    const ConvexBipartiteGraph star(1, {{1, 1}, {1, 1}, {1, 1}});
    const auto s = dominating_set_via_stree(star);
    CHECK(s.d == xs({1}));
    CHECK(min_dominating_brute(star).optimum == 1);

    const ConvexBipartiteGraph edge(1, {{1, 1}});
    const auto e = dominating_set_via_stree(edge);
    CHECK(e.patched);
    CHECK(e.d == xs({1}));
}

TEST_CASE("domination output always dominates") {
    for (std::uint64_t s = 0; s < 500; ++s) {
        const auto g = small_graph(s);
        const auto d = dominating_set_via_stree(g);
        CHECK(is_dominating(g, d.d));
        CHECK(static_cast<int>(d.d.size()) >= min_dominating_brute(g).optimum);
    }
}

TEST_CASE("vertex cover construction") {
    const auto tri = vc_to_caterpillar_stree(triangle_fixture(), 2);
    CHECK(tri.star_graph.y_count() == 3);
    CHECK(tri.star_graph.x_count() == 12);
    CHECK(tri.caterpillar.backbone.size() == 6);
    CHECK(tri.terminals.size() == 7);
    CHECK(tri.budget == 2);
    CHECK(validate_k_star_caterpillar_convex(tri.star_graph, tri.caterpillar, 1));
    CHECK(min_steiner_brute(tri.star_graph, tri.terminals).optimum == 2);
    CHECK(min_vertex_cover_brute(triangle_fixture()).optimum == 2);
    for (int v = 1; v <= 3; ++v) {
        const auto& nb = tri.star_graph.neighbors_of_y(v);
        for (int z = 7; z <= 12; ++z) CHECK(std::binary_search(nb.begin(), nb.end(), z));
    }

    const auto edge = vc_to_caterpillar_stree(GeneralGraph(2, {{1, 2}}), 1);
    const auto e = min_steiner_brute(edge.star_graph, edge.terminals);
    CHECK(e.optimum == 1);
    CHECK(e.witness.size() == 1);

    const GeneralGraph path(3, {{1, 2}, {2, 3}});
    const auto p = vc_to_caterpillar_stree(path, 1);
    const auto ps = min_steiner_brute(p.star_graph, p.terminals);
    CHECK(ps.optimum == 1);
    CHECK(ps.witness == ys({2}));
    CHECK(steiner_to_cover(p, ps.witness) == std::vector<int>{2});
    CHECK(min_vertex_cover_brute(path).optimum == 1);

    CHECK_THROWS_AS(vc_to_caterpillar_stree(GeneralGraph(3, {}), 1), InvalidInput);
    CHECK_THROWS_AS(vc_to_caterpillar_stree(path, -1), InvalidInput);
}

TEST_CASE("cover certificates map both ways") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const int n = 2 + static_cast<int>(s % 6);
        const auto g = gen_general_graph(s, n, 0.45);
        const auto vc = min_vertex_cover_brute(g);
        const auto inst = vc_to_caterpillar_stree(g, vc.optimum);
        CHECK(validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 1));
        const auto st = min_steiner_brute(inst.star_graph, inst.terminals);
        CHECK(st.optimum == vc.optimum);

        auto members = inst.terminals;
        const auto forward = cover_to_steiner(inst, vc.witness);
        members.insert(members.end(), forward.begin(), forward.end());
        CHECK(induced_connected(inst.star_graph, members));

        const auto back = steiner_to_cover(inst, st.witness);
        for (const auto& [u, v] : g.edges()) {
            CHECK((std::binary_search(back.begin(), back.end(), u) || std::binary_search(back.begin(), back.end(), v)));
        }
    }
}
