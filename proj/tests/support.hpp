#pragma once

#include <cstdint>
#include <vector>

#include "cbsteiner/generators.hpp"
#include "cbsteiner/graph.hpp"

namespace cbsteiner::test {

inline std::vector<Vertex> xs(std::vector<int> ids) {
    std::vector<Vertex> out;
    for (int id : ids) out.push_back(xv(id));
    return out;
}

inline std::vector<Vertex> ys(std::vector<int> ids) {
    std::vector<Vertex> out;
    for (int id : ids) out.push_back(yv(id));
    return out;
}

inline std::vector<int> ids_of(const std::vector<Vertex>& vs, Side side) {
    std::vector<int> out;
    for (const auto& v : vs) {
        if (v.side == side) out.push_back(v.id);
    }
    return out;
}

// Small random connected instance; m in [1, 8], n in [1, 6].
inline ConvexBipartiteGraph small_graph(std::uint64_t seed, int min_m = 1, int min_n = 1) {
    const int m = min_m + static_cast<int>(seed % static_cast<std::uint64_t>(9 - min_m));
    const int n = min_n + static_cast<int>((seed / 7) % static_cast<std::uint64_t>(7 - min_n));
    const double density = 0.15 + 0.1 * static_cast<double>(seed % 8);
    return gen_convex_bipartite(GenConfig{seed * 2654435761u + 17, m, n, density, true});
}

}  // namespace cbsteiner::test
