#pragma once

// Seeded random instances. Same config, same output.

#include <cstdint>
#include <vector>

#include "cbsteiner/graph.hpp"
#include "cbsteiner/result.hpp"

namespace cbsteiner {

struct GenConfig {
    std::uint64_t seed = 1;
    int m = 8;
    int n = 6;
    double density = 0.4;  // mean interval length as a fraction of m
    bool connect = true;
};

// Raw intervals before graph construction; repaired when cfg.connect.
std::vector<Interval> gen_intervals(const GenConfig& cfg);

// Throws DisconnectedGraph if connect is off and the draw is disconnected.
ConvexBipartiteGraph gen_convex_bipartite(const GenConfig& cfg);

// n intervals with endpoints in [1, max(m, 2)]; cfg.m is the value range.
IntervalGraphModel gen_interval_family(const GenConfig& cfg);

// G(n, p) with at least one edge.
GeneralGraph gen_general_graph(std::uint64_t seed, int vertices, double edge_probability);

struct TerminalSpec {
    TerminalCase terminal_case = TerminalCase::AllX;
    std::vector<Vertex> terminals;  // sorted
};

// Throws InfeasibleRequest when the case cannot be drawn: subset_x needs
// m >= 2, subset_y needs n >= 2.
TerminalSpec gen_terminals(const ConvexBipartiteGraph& graph, TerminalCase terminal_case, std::uint64_t seed);

}  // namespace cbsteiner
