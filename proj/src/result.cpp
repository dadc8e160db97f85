#include "cbsteiner/result.hpp"

#include <algorithm>
#include <deque>

#include "cbsteiner/errors.hpp"

namespace cbsteiner {

std::string to_string(TerminalCase c) {
    switch (c) {
        case TerminalCase::AllX: return "all_x";
        case TerminalCase::SubsetX: return "subset_x";
        case TerminalCase::AllY: return "all_y";
        case TerminalCase::SubsetY: return "subset_y";
        case TerminalCase::Mixed: return "mixed";
    }
    return "?";
}

TerminalCase terminal_case_from_string(const std::string& name) {
    for (auto c : {TerminalCase::AllX, TerminalCase::SubsetX, TerminalCase::AllY, TerminalCase::SubsetY,
                   TerminalCase::Mixed}) {
        if (to_string(c) == name) return c;
    }
    throw InvalidInput("unknown terminal case: " + name);
}

std::string to_string(MarkAction a) {
    switch (a) {
        case MarkAction::AddUnmarked: return "add_unmarked";
        case MarkAction::SkipLast: return "skip_last";
        case MarkAction::SkipCovered: return "skip_covered";
        case MarkAction::AddUncovered: return "add_uncovered";
    }
    return "?";
}

std::vector<Edge> spanning_tree(const ConvexBipartiteGraph& graph, std::span<const Vertex> vertices) {
    VertexSet members = make_vertex_set({vertices.begin(), vertices.end()});
    std::vector<Edge> tree;
    if (members.size() <= 1) return tree;
    auto in_set = [&](const Vertex& v) { return std::binary_search(members.begin(), members.end(), v); };
    VertexSet seen{members.front()};
    std::deque<Vertex> queue{members.front()};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        std::vector<Vertex> next;
        if (u.side == Side::X) {
            for (int y : graph.neighbors_of_x(u.id)) next.push_back(yv(y));
        } else {
            const auto& iv = graph.interval(u.id);
            for (int p = iv.l; p <= iv.r; ++p) next.push_back(xv(p));
        }
        for (const auto& w : next) {
            if (!in_set(w)) continue;
            auto it = std::lower_bound(seen.begin(), seen.end(), w);
            if (it != seen.end() && *it == w) continue;
            seen.insert(it, w);
            tree.emplace_back(u, w);
            queue.push_back(w);
        }
    }
    if (seen.size() != members.size()) tree.clear();
    return tree;
}

void finalize_result(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals, SteinerResult& result,
                     bool strict) {
    result.steiner_set = make_vertex_set(std::move(result.steiner_set));
    VertexSet all(terminals.begin(), terminals.end());
    for (const auto& v : result.steiner_set) {
        if (std::find(terminals.begin(), terminals.end(), v) != terminals.end()) {
            throw InternalInconsistency("Steiner set contains terminal " + to_string(v));
        }
        all.push_back(v);
    }
    all = make_vertex_set(std::move(all));
    if (!induced_connected(graph, all)) {
        if (!strict) return;
        throw InternalInconsistency("R ∪ S does not induce a connected subgraph (" + result.method + ")");
    }
    result.tree = spanning_tree(graph, all);
}

}  // namespace cbsteiner
