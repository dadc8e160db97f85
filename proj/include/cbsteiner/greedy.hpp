#pragma once

// Linear-time greedy solvers for three terminal cases on convex bipartite
// graphs: R = X, R ⊂ X and R = Y.

#include <span>

#include "cbsteiner/graph.hpp"
#include "cbsteiner/result.hpp"

namespace cbsteiner {

// R = X. Walks z_1 = x_1, z_{i+1} = r(w(z_i)) until x_m is reached and returns
// {w(z_1), ..., w(z_k)}; empty when m = 1.
SteinerResult solve_all_x(const ConvexBipartiteGraph& graph);

// R ⊂ X given as strictly increasing positions. From each frontier the walk
// compares continuing at p = r(w(z)) against restarting at the last covered
// terminal q = z_j, extends both greedily until z_{j+1} is reachable, and
// keeps the cheaper one (ties go to the q-path). The result may contain X
// and Y vertices. Throws InvalidInput when R is empty, unsorted, out of range
// or equal to X.
SteinerResult solve_subset_x(const ConvexBipartiteGraph& graph, std::span<const int> terminals);

// R = Y. Scans Y by nondecreasing right end (ties by left end, then index)
// and marks every interval holding a chosen position. Returns a subset of X.
SteinerResult solve_all_y(const ConvexBipartiteGraph& graph);

}  // namespace cbsteiner
