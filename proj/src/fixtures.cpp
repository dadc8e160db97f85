#include "cbsteiner/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "cbsteiner/greedy.hpp"

namespace cbsteiner {

namespace {

std::string show(std::span<const Vertex> vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << to_string(vs[i]);
    out << '}';
    return out.str();
}

template <typename T>
void expect_eq(std::vector<std::string>& diffs, const std::string& what, const T& got, const T& want) {
    if (got == want) return;
    std::ostringstream out;
    if constexpr (std::is_same_v<T, VertexSet>) {
        out << what << ": got " << show(got) << ", expected " << show(want);
    } else {
        out << what << ": got " << got << ", expected " << want;
    }
    diffs.push_back(out.str());
}

VertexSet vset(std::initializer_list<Vertex> vs) { return make_vertex_set(vs); }

std::vector<Vertex> x_terminals(std::span<const int> ps) {
    std::vector<Vertex> out;
    for (int p : ps) out.push_back(xv(p));
    return out;
}

std::vector<Vertex> y_terminals(std::span<const int> ys) {
    std::vector<Vertex> out;
    for (int y : ys) out.push_back(yv(y));
    return out;
}

}  // namespace

ConvexBipartiteGraph all_x_fixture() { return ConvexBipartiteGraph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }

ConvexBipartiteGraph subset_x_fixture() {
    return ConvexBipartiteGraph(
        13, {{1, 3}, {2, 4}, {3, 4}, {3, 5}, {5, 6}, {6, 8}, {6, 10}, {9, 11}, {10, 12}, {11, 13}});
}

std::vector<int> subset_x_fixture_terminals() { return {1, 3, 4, 6, 8, 11, 12, 13}; }

ConvexBipartiteGraph all_y_fixture() { return ConvexBipartiteGraph(8, {{1, 2}, {2, 4}, {4, 6}, {4, 7}, {7, 8}}); }

ConvexBipartiteGraph subset_y_fixture() {
    return ConvexBipartiteGraph(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
}

std::vector<int> subset_y_fixture_terminals() { return {1, 3, 5}; }

GeneralGraph triangle_fixture() { return GeneralGraph(3, {{1, 2}, {2, 3}, {1, 3}}); }

TraceReplay replay_all_x_trace() {
    TraceReplay out{"all_x", {}, {}};
    const auto g = all_x_fixture();
    const auto fr = far_reach(g, 3);
    expect_eq(out.diffs, "T(x3)", Json(fr.t_set).dump(), Json({3, 4}).dump());
    expect_eq(out.diffs, "w(x3)", fr.w, 4);

    const auto result = solve_all_x(g);
    const auto& steps = std::get<std::vector<AllXStep>>(result.trace);
    expect_eq(out.diffs, "steps", steps.size(), std::size_t{2});
    if (steps.size() == 2) {
        expect_eq(out.diffs, "step 1 w", steps[0].w, 2);
        expect_eq(out.diffs, "step 1 reach", steps[0].reach, 3);
        expect_eq(out.diffs, "step 2 z", steps[1].z, 3);
        expect_eq(out.diffs, "step 2 w", steps[1].w, 4);
    }
    expect_eq(out.diffs, "S", result.steiner_set, vset({yv(2), yv(4)}));

    std::vector<Vertex> all_x;
    for (int p = 1; p <= g.m(); ++p) all_x.push_back(xv(p));
    const auto oracle = min_steiner_brute(g, all_x);
    expect_eq(out.diffs, "oracle optimum", oracle.optimum, 2);
    out.report = {{"result", result_json(result)}, {"oracle", oracle_json(oracle)}};
    return out;
}

TraceReplay replay_subset_x_trace() {
    TraceReplay out{"subset_x", {}, {}};
    const auto g = subset_x_fixture();
    const auto terminals = subset_x_fixture_terminals();
    const auto result = solve_subset_x(g, terminals);
    const auto& steps = std::get<std::vector<SubsetXStep>>(result.trace);

    struct Expected {
        int p;
        int q;
        VertexSet s1;
        VertexSet s2;
        bool took_s1;
        VertexSet after;
    };
    const std::vector<Expected> want = {
        {3, 3, {}, {}, false, vset({yv(1), yv(4)})},
        {5, 4, vset({xv(5)}), vset({yv(4), xv(5)}), true, vset({yv(1), yv(4), xv(5), yv(5)})},
        {6, 6, {}, {}, false, vset({yv(1), yv(4), xv(5), yv(5), yv(7)})},
        {10, 8, vset({xv(10)}), vset({yv(7), xv(10)}), true,
         vset({yv(1), yv(4), xv(5), yv(5), yv(7), xv(10), yv(9)})},
        {12, 12, {}, {}, false, vset({yv(1), yv(4), xv(5), yv(5), yv(7), xv(10), yv(9), yv(10)})},
    };
    expect_eq(out.diffs, "iterations", steps.size(), want.size());
    VertexSet running{yv(1)};
    for (std::size_t i = 0; i < std::min(steps.size(), want.size()); ++i) {
        const auto tag = "iteration " + std::to_string(i + 1);
        const auto& s = steps[i];
        const auto& w = want[i];
        expect_eq(out.diffs, tag + " p", s.p_start, w.p);
        expect_eq(out.diffs, tag + " q", s.q_start, w.q);
        expect_eq(out.diffs, tag + " S1", make_vertex_set(s.s1), w.s1);
        expect_eq(out.diffs, tag + " S2", make_vertex_set(s.s2), w.s2);
        expect_eq(out.diffs, tag + " took S1", s.took_s1, w.took_s1);
        running.insert(running.end(), s.added.begin(), s.added.end());
        running = make_vertex_set(running);
        expect_eq(out.diffs, tag + " S", running, w.after);
    }
    expect_eq(out.diffs, "S", result.steiner_set, want.back().after);
    const auto oracle = min_steiner_brute(g, x_terminals(terminals));
    expect_eq(out.diffs, "oracle optimum", oracle.optimum, 8);
    out.report = {{"result", result_json(result)}, {"oracle", oracle_json(oracle)}};
    return out;
}

TraceReplay replay_all_y_trace() {
    TraceReplay out{"all_y", {}, {}};
    const auto g = all_y_fixture();
    const auto result = solve_all_y(g);
    const auto& steps = std::get<std::vector<AllYStep>>(result.trace);

    struct Row {
        int y;
        MarkAction action;
        int added;
        std::vector<int> marked;
    };
    const std::vector<Row> rows = {
        {1, MarkAction::AddUnmarked, 2, {1, 2}},  {2, MarkAction::AddUncovered, 4, {3, 4}},
        {3, MarkAction::SkipCovered, 0, {}},      {4, MarkAction::AddUncovered, 7, {5}},
        {5, MarkAction::SkipLast, 0, {}},
    };
    expect_eq(out.diffs, "iterations", steps.size(), rows.size());
    for (std::size_t i = 0; i < std::min(steps.size(), rows.size()); ++i) {
        const auto tag = "row " + std::to_string(i + 1);
        expect_eq(out.diffs, tag + " y", steps[i].y, rows[i].y);
        expect_eq(out.diffs, tag + " action", to_string(steps[i].action), to_string(rows[i].action));
        expect_eq(out.diffs, tag + " added", steps[i].added, rows[i].added);
        expect_eq(out.diffs, tag + " marked", Json(steps[i].newly_marked).dump(), Json(rows[i].marked).dump());
    }
    // final row: the loop ends with S = {x2, x4, x7}
    expect_eq(out.diffs, "row 6 S", result.steiner_set, vset({xv(2), xv(4), xv(7)}));

    std::vector<Vertex> all_y;
    for (int y = 1; y <= g.n(); ++y) all_y.push_back(yv(y));
    const auto oracle = min_steiner_brute(g, all_y);
    expect_eq(out.diffs, "oracle optimum", oracle.optimum, 3);
    out.report = {{"result", result_json(result)}, {"oracle", oracle_json(oracle)}};
    return out;
}

TraceReplay replay_dp_trace() {
    TraceReplay out{"subset_y_table", {}, {}};
    const auto g = subset_y_fixture();
    const auto terminals = subset_y_fixture_terminals();
    const auto table = compute_table(g, terminals);
    const std::vector<std::pair<std::pair<int, int>, int>> want = {
        {{1, 2}, 0}, {{2, 3}, 2}, {{2, 7}, 2}, {{3, 4}, 3}, {{4, 5}, 3}, {{5, 6}, 3}};
    for (const auto& [cell, value] : want) {
        auto got = table.F(cell.first, cell.second);
        const auto tag = "F[" + std::to_string(cell.first) + "," + std::to_string(cell.second) + "]";
        expect_eq(out.diffs, tag, got ? std::to_string(*got) : std::string("inf"), std::to_string(value));
    }
    expect_eq(out.diffs, "class", to_string(table.instance_class), std::string("E3"));
    const auto result = reconstruct(table, g, terminals);
    expect_eq(out.diffs, "size", result.size(), 4);
    expect_eq(out.diffs, "contains y6",
              std::binary_search(result.steiner_set.begin(), result.steiner_set.end(), yv(6)), true);
    expect_eq(out.diffs, "connected", !result.tree.empty(), true);
    const auto exact = solve_subset_y(g, terminals);
    expect_eq(out.diffs, "exact size", exact.size(), 4);
    const auto oracle = min_steiner_brute(g, y_terminals(terminals));
    expect_eq(out.diffs, "oracle optimum", oracle.optimum, 4);
    out.report = {{"table", table_json(table)},
                  {"result", result_json(result)},
                  {"exact", result_json(exact)},
                  {"oracle", oracle_json(oracle)}};
    return out;
}

TraceReplay replay_vc_trace() {
    TraceReplay out{"vc_triangle", {}, {}};
    const auto g = triangle_fixture();
    const auto inst = vc_to_caterpillar_stree(g, 2);
    expect_eq(out.diffs, "|V1|", inst.star_graph.y_count(), 3);
    expect_eq(out.diffs, "|V2|+|V3|", inst.star_graph.x_count(), 12);
    expect_eq(out.diffs, "|R|", inst.terminals.size(), std::size_t{7});
    expect_eq(out.diffs, "k'", inst.budget, 2);
    expect_eq(out.diffs, "1-star caterpillar", validate_k_star_caterpillar_convex(inst.star_graph, inst.caterpillar, 1),
              true);
    const auto vc = min_vertex_cover_brute(g);
    const auto st = min_steiner_brute(inst.star_graph, inst.terminals);
    expect_eq(out.diffs, "VC optimum", vc.optimum, 2);
    expect_eq(out.diffs, "Steiner optimum", st.optimum, 2);
    out.report = {{"vertex_cover", oracle_json(vc)}, {"steiner", oracle_json(st)}};
    return out;
}

std::vector<TraceReplay> replay_reference_traces() {
    return {replay_all_x_trace(), replay_subset_x_trace(), replay_all_y_trace(), replay_dp_trace(),
            replay_vc_trace()};
}

}  // namespace cbsteiner
