#pragma once

// Steiner sets for Y-side terminals (R ⊂ Y).
//
// Two routes live here:
//
//  * The interval-indexed table F[i, j] / f (compute_table) with back-pointer
//    reconstruction and the l(z_i) patch (reconstruct). It follows the
//    classic recursion literally and is kept for trace replay and audit; it
//    is not exact on every instance.
//
//  * The frontier DP (solve_subset_y / frontier_steiner), which is exact.
//    A solution is a set P of X positions plus bought non-terminal intervals
//    Q such that every terminal holds a point of P and every pair of
//    consecutive points shares an interval of R ∪ Q. The DP walks the points
//    left to right with state (last point, reach of the bought interval that
//    covers it) and minimises (|S|, |S ∩ Y|). O(m^2 n).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cbsteiner/graph.hpp"
#include "cbsteiner/result.hpp"

namespace cbsteiner {

// Y sorted by ascending l, ties by descending r; identical intervals keep
// index order.
struct SigmaOrder {
    std::vector<int> order;
};

SigmaOrder sigma_order(const ConvexBipartiteGraph& graph);

enum class InstanceClass : std::uint8_t { E1, E2, E3, E4 };
std::string to_string(InstanceClass c);

// Per-entry case of the recursion.
enum class EntryCase : std::uint8_t { Base, Case1, Case2, Case3 };
std::string to_string(EntryCase c);

struct ClassifyResult {
    InstanceClass instance_class = InstanceClass::E4;
    int last_terminal = 0;  // z_k, σ-last terminal
    std::vector<int> covering;  // y_c witnesses: hold w_{u-1}, reach r_k or beyond
    std::vector<int> short_of;  // y_d witnesses: hold w_{u-1}, end in [l_k, r_k)
};

// Terminals are Y indices; order irrelevant.
ClassifyResult classify(const ConvexBipartiteGraph& graph, std::span<const int> terminals);

struct DpEntry {
    int y = 0;
    int i = 0;  // window coordinates (1 = l(z_1))
    int j = 0;
    EntryCase entry_case = EntryCase::Base;
    std::optional<int> f;  // nullopt = ∞
    char branch = ' ';     // 'c' or 'd' for the chosen predecessor, ' ' for base
    int pred_i = 0;
    int pred_j = 0;
};

struct DpCell {
    std::optional<int> value;  // nullopt = ∞
    int argmin_y = 0;
};

struct DpTable {
    int window_offset = 1;  // real position of w_1
    int window_length = 0;  // t = m - offset + 1
    InstanceClass instance_class = InstanceClass::E4;
    int last_terminal = 0;
    std::vector<DpEntry> entries;  // σ order, windowed intervals only
    std::map<std::pair<int, int>, DpCell> cells;
    std::optional<int> final_value;

    // Instrumentation.
    std::uint64_t predecessor_reads = 0;
    bool reads_were_earlier_rows = true;  // every F[p, ·] read had p < i
    std::uint64_t cell_updates = 0;

    std::optional<int> F(int i, int j) const;
    const DpEntry& entry_of(int y) const;
};

// Fills the table in σ order over the window x_{l(z_1)} .. x_m.
DpTable compute_table(const ConvexBipartiteGraph& graph, std::span<const int> terminals);

// Back-pointer walk from z_k plus the l(z_i) patch. The result may be
// infeasible or larger than optimal on some inputs; `finalize_result` is run
// non-strictly so the caller can inspect the tree field.
SteinerResult reconstruct(const DpTable& table, const ConvexBipartiteGraph& graph, std::span<const int> terminals);

SteinerResult solve_subset_y_table(const ConvexBipartiteGraph& graph, std::span<const int> terminals);

// Exact solver for ∅ ≠ R ⊂ Y.
SteinerResult solve_subset_y(const ConvexBipartiteGraph& graph, std::span<const int> terminals);

// Exact solver for any nonempty R ⊆ Y (R = Y included).
SteinerResult frontier_steiner(const ConvexBipartiteGraph& graph, std::span<const int> terminals);

// Tab-separated dump: i, j, y, case, f, branch, predecessor cell.
std::string dump_table_tsv(const DpTable& table);

}  // namespace cbsteiner
