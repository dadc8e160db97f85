#include "cbsteiner/reductions.hpp"

#include <algorithm>

#include "cbsteiner/dp.hpp"
#include "cbsteiner/errors.hpp"
#include "cbsteiner/greedy.hpp"

namespace cbsteiner {

namespace {

std::vector<int> sorted_unique_checked(std::span<const int> ids, int upper, const char* what) {
    std::vector<int> out(ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 1 || out[i] > upper) throw InvalidInput(std::string(what) + " out of range: " + std::to_string(out[i]));
        if (i > 0 && out[i] == out[i - 1]) throw InvalidInput(std::string("duplicate ") + what + ": " + std::to_string(out[i]));
    }
    return out;
}

void split_terminals(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals, std::vector<int>& rx,
                     std::vector<int>& ry) {
    if (terminals.empty()) throw InvalidInput("terminal set is empty");
    std::vector<int> xs;
    std::vector<int> ys;
    for (const auto& v : terminals) (v.side == Side::X ? xs : ys).push_back(v.id);
    rx = sorted_unique_checked(xs, graph.m(), "terminal position");
    ry = sorted_unique_checked(ys, graph.n(), "terminal Y index");
}

SteinerResult solve_y_side(const ConvexBipartiteGraph& graph, std::span<const int> ry) {
    if (static_cast<int>(ry.size()) == graph.n()) return solve_all_y(graph);
    return solve_subset_y(graph, ry);
}

}  // namespace

MixedLift lift_mixed_terminals(const ConvexBipartiteGraph& graph, std::span<const int> r_x, std::span<const int> r_y) {
    if (r_x.empty()) throw InvalidInput("lift needs at least one X terminal");
    auto xs = sorted_unique_checked(r_x, graph.m(), "terminal position");
    auto ys = sorted_unique_checked(r_y, graph.n(), "terminal Y index");
    std::vector<Interval> intervals(graph.intervals().begin(), graph.intervals().end());
    std::map<int, int> pendants;
    for (int z : xs) {
        intervals.push_back({z, z});
        pendants[z] = static_cast<int>(intervals.size());
        ys.push_back(static_cast<int>(intervals.size()));
    }
    return MixedLift{ConvexBipartiteGraph(graph.m(), std::move(intervals)), std::move(pendants), std::move(ys)};
}

TerminalCase classify_terminals(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals) {
    std::vector<int> rx;
    std::vector<int> ry;
    split_terminals(graph, terminals, rx, ry);
    if (ry.empty()) return static_cast<int>(rx.size()) == graph.m() ? TerminalCase::AllX : TerminalCase::SubsetX;
    if (rx.empty()) return static_cast<int>(ry.size()) == graph.n() ? TerminalCase::AllY : TerminalCase::SubsetY;
    return TerminalCase::Mixed;
}

SteinerResult solve_general(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals) {
    std::vector<int> rx;
    std::vector<int> ry;
    split_terminals(graph, terminals, rx, ry);
    switch (classify_terminals(graph, terminals)) {
        case TerminalCase::AllX: return solve_all_x(graph);
        case TerminalCase::SubsetX: return solve_subset_x(graph, rx);
        case TerminalCase::AllY: return solve_all_y(graph);
        case TerminalCase::SubsetY: return solve_subset_y(graph, ry);
        case TerminalCase::Mixed: break;
    }

    const auto lift = lift_mixed_terminals(graph, rx, ry);
    SteinerResult lifted = solve_y_side(lift.lifted_graph, lift.terminals);
    SteinerResult result;
    result.terminal_case = TerminalCase::Mixed;
    result.method = "lift+" + lifted.method;
    for (const auto& v : lifted.steiner_set) {
        if (v.side == Side::Y && v.id > graph.n()) {
            throw InternalInconsistency("pendant " + to_string(v) + " appears in the lifted Steiner set");
        }
        if (v.side == Side::X && std::binary_search(rx.begin(), rx.end(), v.id)) continue;
        result.steiner_set.push_back(v);
    }
    result.trace = std::move(lifted.trace);
    finalize_result(graph, terminals, result);
    return result;
}

IntervalImage interval_to_convex_bipartite(const IntervalGraphModel& intervals) {
    if (intervals.size() == 0) throw InvalidInput("empty interval family");
    std::vector<int> values;
    for (const auto& iv : intervals.intervals()) {
        values.push_back(iv.l);
        values.push_back(iv.r);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto position = [&](int value) {
        return static_cast<int>(std::lower_bound(values.begin(), values.end(), value) - values.begin()) + 1;
    };
    std::vector<Interval> mapped;
    std::vector<int> y_of{0};
    for (int v = 1; v <= intervals.size(); ++v) {
        const auto& iv = intervals.interval(v);
        mapped.push_back({position(iv.l), position(iv.r)});
        y_of.push_back(v);
    }
    const int m = static_cast<int>(values.size());
    return IntervalImage{ConvexBipartiteGraph(m, std::move(mapped)), std::move(values), std::move(y_of)};
}

IntervalSteinerResult solve_interval_steiner(const IntervalGraphModel& intervals, std::span<const int> terminals) {
    if (terminals.empty()) throw InvalidInput("terminal set is empty");
    const auto image = interval_to_convex_bipartite(intervals);
    auto ry = sorted_unique_checked(terminals, intervals.size(), "terminal interval");
    IntervalSteinerResult out{{}, solve_y_side(image.graph, ry)};
    for (const auto& v : out.image.steiner_set) {
        if (v.side == Side::Y) out.steiner_set.push_back(image.y_of[static_cast<std::size_t>(v.id)]);
    }
    std::sort(out.steiner_set.begin(), out.steiner_set.end());

    std::vector<int> members(ry);
    members.insert(members.end(), out.steiner_set.begin(), out.steiner_set.end());
    if (!induced_connected(intervals.intersection_graph(), members)) {
        throw InternalInconsistency("projected interval Steiner set is not connected");
    }
    return out;
}

bool is_dominating(const ConvexBipartiteGraph& graph, std::span<const Vertex> set) {
    std::vector<char> x_hit(static_cast<std::size_t>(graph.m()) + 1, 0);
    std::vector<char> y_hit(static_cast<std::size_t>(graph.n()) + 1, 0);
    for (const auto& v : set) {
        if (!graph.contains(v)) throw InvalidInput("vertex not in graph: " + to_string(v));
        if (v.side == Side::X) {
            x_hit[static_cast<std::size_t>(v.id)] = 1;
            for (int y : graph.neighbors_of_x(v.id)) y_hit[static_cast<std::size_t>(y)] = 1;
        } else {
            y_hit[static_cast<std::size_t>(v.id)] = 1;
            const auto& iv = graph.interval(v.id);
            for (int p = iv.l; p <= iv.r; ++p) x_hit[static_cast<std::size_t>(p)] = 1;
        }
    }
    return std::all_of(x_hit.begin() + 1, x_hit.end(), [](char c) { return c != 0; }) &&
           std::all_of(y_hit.begin() + 1, y_hit.end(), [](char c) { return c != 0; });
}

DominationResult dominating_set_via_stree(const ConvexBipartiteGraph& graph) {
    DominationResult out;
    out.d1 = solve_all_x(graph).steiner_set;
    out.d2 = solve_all_y(graph).steiner_set;
    std::vector<Vertex> all(out.d1);
    all.insert(all.end(), out.d2.begin(), out.d2.end());
    out.d = make_vertex_set(std::move(all));
    if (!is_dominating(graph, out.d)) {
        // both calls return ∅ only when m = n = 1
        out.d.push_back(xv(1));
        out.d = make_vertex_set(std::move(out.d));
        out.patched = true;
    }
    out.valid = is_dominating(graph, out.d);
    if (!out.valid) throw InternalInconsistency("domination output does not dominate");
    return out;
}

VcReductionInstance vc_to_caterpillar_stree(const GeneralGraph& g, int k) {
    if (g.edge_count() == 0) throw InvalidInput("vertex cover reduction needs at least one edge");
    if (k < 0) throw InvalidInput("budget must be nonnegative");
    const int M = g.edge_count();
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 1; i <= M; ++i) {
        const auto [u, v] = g.edges()[static_cast<std::size_t>(i - 1)];
        for (int end : {u, v}) {
            lists[static_cast<std::size_t>(end - 1)].push_back(2 * i - 1);
            lists[static_cast<std::size_t>(end - 1)].push_back(2 * i);
        }
    }
    for (auto& list : lists) {
        for (int z = 2 * M + 1; z <= 4 * M; ++z) list.push_back(z);
    }

    CaterpillarStructure cat;
    cat.k = 1;
    for (int t = 1; t <= 2 * M; ++t) {
        cat.backbone.push_back(2 * M + t);
        cat.pendants[2 * M + t] = {t};
    }
    std::vector<Vertex> terminals;
    for (int t = 1; t <= 2 * M; ++t) terminals.push_back(xv(t));
    terminals.push_back(xv(2 * M + 1));
    return VcReductionInstance{BipartiteGraph(4 * M, std::move(lists)), std::move(cat), std::move(terminals), k, M};
}

std::vector<Vertex> cover_to_steiner(const VcReductionInstance& instance, std::span<const int> cover) {
    std::vector<Vertex> out;
    for (int v : cover) {
        if (v < 1 || v > instance.star_graph.y_count()) throw InvalidInput("cover vertex out of range: " + std::to_string(v));
        out.push_back(yv(v));
    }
    return make_vertex_set(std::move(out));
}

std::vector<int> steiner_to_cover(const VcReductionInstance& instance, std::span<const Vertex> steiner) {
    std::vector<int> out;
    for (const auto& v : steiner) {
        if (v.side != Side::Y) continue;
        if (v.id < 1 || v.id > instance.star_graph.y_count()) throw InvalidInput("vertex not in graph: " + to_string(v));
        out.push_back(v.id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cbsteiner
