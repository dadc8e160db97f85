#pragma once

// Graph transformations around the core solvers: mixed terminals, the
// general dispatcher, interval graphs, domination, and the vertex cover
// hardness construction.

#include <map>
#include <span>
#include <vector>

#include "cbsteiner/graph.hpp"
#include "cbsteiner/result.hpp"

namespace cbsteiner {

// G* = G plus a pendant y vertex w_i = (z_i, z_i) for every terminal
// position z_i. Pendants take Y indices n+1, n+2, ... in terminal order.
struct MixedLift {
    ConvexBipartiteGraph lifted_graph;
    std::map<int, int> pendant_map;  // x position -> pendant Y index
    std::vector<int> terminals;      // R* = R_y ∪ pendants, ascending
};

MixedLift lift_mixed_terminals(const ConvexBipartiteGraph& graph, std::span<const int> r_x, std::span<const int> r_y);

// Classifies R and routes it to the matching solver. Mixed sets go through
// the lift; the returned set is expressed on the original graph.
SteinerResult solve_general(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals);

TerminalCase classify_terminals(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals);

struct IntervalImage {
    ConvexBipartiteGraph graph;
    std::vector<int> x_values;  // x_values[p-1] = endpoint value of x_p
    std::vector<int> y_of;      // interval vertex v -> Y index (identity, index 0 unused)
};

// X* = sorted distinct endpoint values; y_i spans the positions whose value
// lies in [l_i, r_i]. Throws InvalidInput on an empty family and
// DisconnectedGraph when the intersection graph is disconnected.
IntervalImage interval_to_convex_bipartite(const IntervalGraphModel& intervals);

struct IntervalSteinerResult {
    std::vector<int> steiner_set;  // interval vertex ids, ascending
    SteinerResult image;           // solution on the convex image
};

IntervalSteinerResult solve_interval_steiner(const IntervalGraphModel& intervals, std::span<const int> terminals);

struct DominationResult {
    VertexSet d1;  // R = X solution
    VertexSet d2;  // R = Y solution
    VertexSet d;
    bool valid = false;
    bool patched = false;  // x_1 added because d1 ∪ d2 was not dominating
};

DominationResult dominating_set_via_stree(const ConvexBipartiteGraph& graph);

bool is_dominating(const ConvexBipartiteGraph& graph, std::span<const Vertex> set);

// X* ids: y_{i1} = 2i-1, y_{i2} = 2i (V2, edge gadgets), then
// z_{i1} = 2M+2i-1, z_{i2} = 2M+2i (V3, backbone). Y* = V1 = vertices of g.
struct VcReductionInstance {
    BipartiteGraph star_graph;
    CaterpillarStructure caterpillar;
    std::vector<Vertex> terminals;  // all of V2 plus z_11
    int budget = 0;
    int edge_count = 0;
};

VcReductionInstance vc_to_caterpillar_stree(const GeneralGraph& g, int k);

// Forward map of a vertex cover to a Steiner set (Y* vertices).
std::vector<Vertex> cover_to_steiner(const VcReductionInstance& instance, std::span<const int> cover);

// Backward map: S ∩ V1. Every edge gadget is a terminal whose only
// neighbours are its endpoints in V1, so this is always a cover.
std::vector<int> steiner_to_cover(const VcReductionInstance& instance, std::span<const Vertex> steiner);

}  // namespace cbsteiner
