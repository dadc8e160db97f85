#include <algorithm>
#include <queue>
#include <random>

#include "cbsteiner/errors.hpp"
#include "cbsteiner/fixtures.hpp"
#include "cbsteiner/graph.hpp"
#include "cbsteiner/reductions.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cbsteiner;
using cbsteiner::test::small_graph;

namespace {

// Independent reachability count over an explicit edge list.
bool bfs_connected(const ConvexBipartiteGraph& g, const std::vector<Vertex>& members) {
    if (members.empty()) return true;
    const auto edges = g.edges();
    std::vector<Vertex> seen{members.front()};
    std::queue<Vertex> todo;
    todo.push(members.front());
    auto member = [&](const Vertex& v) { return std::find(members.begin(), members.end(), v) != members.end(); };
    while (!todo.empty()) {
        const Vertex u = todo.front();
        todo.pop();
        for (const auto& [a, b] : edges) {
            Vertex other;
            if (a == u) {
                other = b;
            } else if (b == u) {
                other = a;
            } else {
                continue;
            }
            if (member(other) && std::find(seen.begin(), seen.end(), other) == seen.end()) {
                seen.push_back(other);
                todo.push(other);
            }
        }
    }
    return seen.size() == members.size();
}

std::vector<Vertex> all_vertices(const ConvexBipartiteGraph& g) {
    std::vector<Vertex> out;
    for (int p = 1; p <= g.m(); ++p) out.push_back(xv(p));
    for (int y = 1; y <= g.n(); ++y) out.push_back(yv(y));
    return out;
}

// Swaps the pendants hanging on the first and last backbone vertices.
CaterpillarStructure swap_pendants(CaterpillarStructure cat) {
    std::swap(cat.pendants[cat.backbone.front()], cat.pendants[cat.backbone.back()]);
    return cat;
}

// Exchanges the first backbone vertex with its own pendant.
CaterpillarStructure swap_roles(CaterpillarStructure cat) {
    const int bb = cat.backbone.front();
    const int leaf = cat.pendants[bb].front();
    cat.pendants.erase(bb);
    cat.backbone.front() = leaf;
    cat.pendants[leaf] = {bb};
    return cat;
}

}  // namespace

TEST_CASE("validate_convex reports bounds and connectivity") {
    const std::vector<Interval> good{{1, 2}, {2, 3}};
    auto ok = validate_convex(3, good);
    CHECK(ok.ok());
    CHECK(ok.connected);

    const std::vector<Interval> split{{1, 1}, {3, 3}};
    auto disc = validate_convex(3, split);
    CHECK(disc.intervals_ok);
    CHECK_FALSE(disc.connected);

    const std::vector<Interval> wide{{1, 2}, {3, 5}};
    auto bad = validate_convex(4, wide);
    CHECK_FALSE(bad.intervals_ok);
    CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(ConvexBipartiteGraph(3, {{1, 1}, {3, 3}}), DisconnectedGraph);
    CHECK_THROWS_AS(ConvexBipartiteGraph(4, {{1, 2}, {3, 5}}), InvalidInput);
    CHECK_THROWS_AS(ConvexBipartiteGraph(3, {{2, 1}}), InvalidInput);
    CHECK_THROWS_AS(GeneralGraph(2, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(GeneralGraph(2, {{1, 2}, {2, 1}}), InvalidInput);
}

TEST_CASE("interval_bounds reads stored intervals") {
    CHECK(interval_bounds(all_x_fixture(), 2) == Interval{1, 3});
    CHECK(interval_bounds(subset_x_fixture(), 7) == Interval{6, 10});
    ConvexBipartiteGraph pendant(3, {{1, 3}, {2, 2}});
    CHECK(interval_bounds(pendant, 2) == Interval{2, 2});
    CHECK_THROWS_AS(interval_bounds(pendant, 3), InvalidInput);
    CHECK_THROWS_AS(interval_bounds(pendant, 0), InvalidInput);
}

TEST_CASE("far_reach picks the far interval, ties to the largest index") {
    const auto g = all_x_fixture();
    auto a = far_reach(g, 1);
    CHECK(a.w == 2);
    CHECK(a.t_set == std::vector<int>{2});
    auto b = far_reach(g, 3);
    CHECK(b.t_set == std::vector<int>{3, 4});
    CHECK(b.w == 4);
    ConvexBipartiteGraph small(3, {{1, 2}, {2, 3}});
    auto c = far_reach(small, 2);
    CHECK(c.w == 2);
    CHECK(c.t_set == std::vector<int>{2});
    CHECK_THROWS_AS(far_reach(small, 4), InvalidInput);
}

TEST_CASE("far_reach properties on random graphs") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const auto g = small_graph(s);
        const auto table = far_reach_table(g);
        for (int x = 1; x <= g.m(); ++x) {
            const auto fr = far_reach(g, x);
            REQUIRE_FALSE(fr.t_set.empty());
            int best = 0;
            for (int y : g.neighbors_of_x(x)) best = std::max(best, g.interval(y).r);
            for (int y : fr.t_set) {
                CHECK(g.adjacent(x, y));
                CHECK(g.interval(y).r == best);
            }
            CHECK(fr.w == fr.t_set.back());
            CHECK(table[static_cast<std::size_t>(x)] == fr.w);
        }
    }
}

TEST_CASE("adjacency round-trips through the edge list") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto g = small_graph(s);
        std::vector<std::vector<int>> pos(static_cast<std::size_t>(g.n()) + 1);
        for (const auto& [a, b] : g.edges()) {
            REQUIRE(a.side == Side::X);
            REQUIRE(b.side == Side::Y);
            pos[static_cast<std::size_t>(b.id)].push_back(a.id);
        }
        for (int y = 1; y <= g.n(); ++y) {
            auto& p = pos[static_cast<std::size_t>(y)];
            std::sort(p.begin(), p.end());
            const auto iv = g.interval(y);
            REQUIRE(static_cast<int>(p.size()) == iv.length());
            CHECK(p.front() == iv.l);
            CHECK(p.back() == iv.r);
        }
    }
}

TEST_CASE("induced_connected examples") {
    const auto g = all_x_fixture();
    const auto tree = cbsteiner::test::xs({1, 2, 3, 4});
    auto with = tree;
    with.push_back(yv(2));
    with.push_back(yv(4));
    CHECK(induced_connected(g, with));
    CHECK_FALSE(induced_connected(g, cbsteiner::test::xs({1, 4})));
    CHECK(induced_connected(g, cbsteiner::test::ys({3})));
    CHECK(induced_connected(GeneralGraph(3, {{1, 2}}), std::vector<int>{3}));
    CHECK_THROWS_AS(induced_connected(g, cbsteiner::test::xs({5})), InvalidInput);
}

TEST_CASE("induced_connected agrees with BFS on random subsets") {
    std::mt19937_64 rng(99);
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto g = small_graph(s);
        std::vector<Vertex> members;
        for (const auto& v : all_vertices(g)) {
            if (rng() % 2) members.push_back(v);
        }
        if (members.empty()) members.push_back(xv(1));
        const bool want = bfs_connected(g, members);
        CHECK(induced_connected(g, members) == want);
        CHECK(induced_connected(to_bipartite(g), members) == want);
        std::vector<int> ids;
        for (const auto& v : members) ids.push_back(g.simple_id(v));
        CHECK(g.to_simple().induced_connected(ids) == want);
    }
}

TEST_CASE("caterpillar validation") {
    const auto inst = vc_to_caterpillar_stree(triangle_fixture(), 2);
    CHECK(validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 1));

    // Every cover vertex sees the whole backbone, so moving pendants keeps subtrees.
    CHECK(validate_k_star_caterpillar_convex(inst.star_graph, swap_pendants(inst.caterpillar), 1));
    CHECK_FALSE(validate_k_star_caterpillar_convex(inst.star_graph, swap_roles(inst.caterpillar), 1));

    const auto g = all_x_fixture();
    CHECK(validate_k_star_caterpillar_convex(to_bipartite(g), path_caterpillar(g.m()), 0));

    CaterpillarStructure short_spine = path_caterpillar(3);
    CHECK_THROWS_AS(validate_k_star_caterpillar_convex(to_bipartite(g), short_spine, 0), InvalidInput);
    CHECK_THROWS_AS(validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 2), InvalidInput);
}

TEST_CASE("path caterpillar accepts exactly the convex interval data") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
        std::vector<Interval> ivs;
        bool convex = true;
        for (auto& list : nbrs) {
            for (int p = 1; p <= m; ++p) {
                if (rng() % 2) list.push_back(p);
            }
            if (list.empty()) list.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(m)));
            if (list.back() - list.front() + 1 != static_cast<int>(list.size())) convex = false;
            ivs.push_back({list.front(), list.back()});
        }
        const BipartiteGraph bg(m, nbrs);
        CHECK(validate_k_star_caterpillar_convex(bg, path_caterpillar(m), 0) == convex);
        if (convex) CHECK(validate_convex(m, ivs).intervals_ok);
    }
}
