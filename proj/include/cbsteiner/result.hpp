#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cbsteiner/graph.hpp"

namespace cbsteiner {

enum class TerminalCase : std::uint8_t { AllX, SubsetX, AllY, SubsetY, Mixed };

std::string to_string(TerminalCase c);
TerminalCase terminal_case_from_string(const std::string& name);

// One step of the R = X walk: z_i, w(z_i), r(w(z_i)).
struct AllXStep {
    int z = 0;
    int w = 0;
    int reach = 0;
};

// One outer iteration of the R ⊂ X two-path comparison.
struct SubsetXStep {
    int iteration = 0;
    int z = 0;          // current z before the iteration
    int zj = 0;         // greatest terminal adjacent to w(z)
    int next_terminal = 0;
    int p_start = 0;
    int q_start = 0;
    std::vector<Vertex> s1;
    std::vector<Vertex> s2;
    bool took_s1 = false;
    std::vector<Vertex> added;
};

enum class MarkAction : std::uint8_t {
    AddUnmarked,    // y_i unmarked: take r_i
    SkipLast,       // marked and r_i = x_m
    SkipCovered,    // marked and some marked interval holds r_{i+1}
    AddUncovered,   // marked but nothing marked reaches r_{i+1}: take r_i
};

std::string to_string(MarkAction a);

struct AllYStep {
    int iteration = 0;
    int y = 0;
    int r = 0;
    MarkAction action = MarkAction::AddUnmarked;
    int added = 0;  // X position taken, 0 if none
    std::vector<int> newly_marked;
};

// Frontier DP witness: chosen connector positions and the Y intervals bought
// to bridge gaps no terminal spans.
struct FrontierStep {
    int position = 0;
    int bought = 0;  // Y index bought to reach this position, 0 if none
};

// Table-DP reconstruction step (see dp.hpp).
struct DpStep {
    int y = 0;
    int i = 0;  // window coordinates
    int j = 0;
    std::string kind;  // "base", "c", "d", "e4", "patch"
    std::vector<Vertex> added;
};

using Trace = std::variant<std::monostate, std::vector<AllXStep>, std::vector<SubsetXStep>, std::vector<AllYStep>,
                           std::vector<FrontierStep>, std::vector<DpStep>>;

struct SteinerResult {
    TerminalCase terminal_case = TerminalCase::AllX;
    std::string method;
    VertexSet steiner_set;
    Trace trace;
    std::vector<Edge> tree;  // spanning tree of G[R ∪ S]

    int size() const noexcept { return static_cast<int>(steiner_set.size()); }
};

// BFS spanning tree of the subgraph induced by `vertices`. Empty when the
// induced subgraph is disconnected.
std::vector<Edge> spanning_tree(const ConvexBipartiteGraph& graph, std::span<const Vertex> vertices);

// Fills `tree` and checks the SteinerResult invariants: S ∩ R = ∅ and
// G[R ∪ S] connected. When `strict`, a violation throws
// InternalInconsistency; otherwise the tree is left empty.
void finalize_result(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals, SteinerResult& result,
                     bool strict = true);

}  // namespace cbsteiner
