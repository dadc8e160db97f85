#pragma once

// Exhaustive baselines. Every search runs by increasing cardinality, so the
// first feasible size is optimal; combinations are visited in lexicographic
// order, which makes the witness deterministic.

#include <cstdint>
#include <span>
#include <vector>

#include "cbsteiner/graph.hpp"

namespace cbsteiner {

struct OracleResult {
    int optimum = 0;
    std::vector<int> witness;  // ids in the graph's own numbering
    std::uint64_t explored = 0;
};

struct VertexOracleResult {
    int optimum = 0;
    VertexSet witness;
    std::uint64_t explored = 0;
};

// Non-terminal candidates with identical neighbourhoods are interchangeable
// and a minimal solution never needs two of them, so only one per class is
// enumerated. Throws OracleScaleExceeded past this many candidates.
inline constexpr int kMaxSteinerCandidates = 32;
inline constexpr int kMaxBruteVertices = 24;

// SimpleGraph ids are 0-based.
OracleResult min_steiner_brute(const SimpleGraph& graph, std::span<const int> terminals);
VertexOracleResult min_steiner_brute(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals);
VertexOracleResult min_steiner_brute(const BipartiteGraph& graph, std::span<const Vertex> terminals);
// GeneralGraph ids are 1-based.
OracleResult min_steiner_brute(const GeneralGraph& graph, std::span<const int> terminals);

// Scans every subset of V∖R without pruning. |V| ≤ 16.
OracleResult min_steiner_powerset(const SimpleGraph& graph, std::span<const int> terminals);

OracleResult min_vertex_cover_brute(const GeneralGraph& g);

OracleResult min_dominating_brute(const SimpleGraph& graph);
VertexOracleResult min_dominating_brute(const ConvexBipartiteGraph& graph);
OracleResult min_dominating_brute(const GeneralGraph& graph);

}  // namespace cbsteiner
