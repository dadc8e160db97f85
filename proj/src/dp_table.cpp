#include <algorithm>
#include <numeric>
#include <sstream>

#include "cbsteiner/dp.hpp"
#include "cbsteiner/errors.hpp"

namespace cbsteiner {

std::string to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::E1: return "E1";
        case InstanceClass::E2: return "E2";
        case InstanceClass::E3: return "E3";
        case InstanceClass::E4: return "E4";
    }
    return "?";
}

std::string to_string(EntryCase c) {
    switch (c) {
        case EntryCase::Base: return "base";
        case EntryCase::Case1: return "case1";
        case EntryCase::Case2: return "case2";
        case EntryCase::Case3: return "case3";
    }
    return "?";
}

SigmaOrder sigma_order(const ConvexBipartiteGraph& graph) {
    SigmaOrder s;
    s.order.resize(static_cast<std::size_t>(graph.n()));
    std::iota(s.order.begin(), s.order.end(), 1);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        const auto& ia = graph.interval(a);
        const auto& ib = graph.interval(b);
        return ia.l != ib.l ? ia.l < ib.l : ia.r > ib.r;
    });
    return s;
}

namespace {

std::vector<char> terminal_mask(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    if (terminals.empty()) throw InvalidInput("terminal set is empty");
    std::vector<char> mask(static_cast<std::size_t>(graph.n()) + 1, 0);
    for (int y : terminals) {
        if (y < 1 || y > graph.n()) throw InvalidInput("terminal Y index out of range: " + std::to_string(y));
        if (mask[static_cast<std::size_t>(y)]) throw InvalidInput("duplicate terminal y" + std::to_string(y));
        mask[static_cast<std::size_t>(y)] = 1;
    }
    return mask;
}

// Intervals restricted to the window x_offset .. x_m, in window coordinates.
struct Window {
    int offset = 1;
    int length = 0;
    std::vector<std::optional<Interval>> clipped;  // by Y index; nullopt = pruned
    std::vector<int> order;                        // σ over surviving intervals
    int last_terminal = 0;
};

Window make_window(const ConvexBipartiteGraph& graph, const std::vector<char>& is_terminal) {
    Window w;
    w.offset = graph.m();
    for (int y = 1; y <= graph.n(); ++y) {
        if (is_terminal[static_cast<std::size_t>(y)]) w.offset = std::min(w.offset, graph.interval(y).l);
    }
    w.length = graph.m() - w.offset + 1;
    w.clipped.assign(static_cast<std::size_t>(graph.n()) + 1, std::nullopt);
    for (int y = 1; y <= graph.n(); ++y) {
        const auto& iv = graph.interval(y);
        if (iv.r < w.offset) continue;
        w.clipped[static_cast<std::size_t>(y)] = Interval{std::max(iv.l, w.offset) - w.offset + 1, iv.r - w.offset + 1};
        w.order.push_back(y);
    }
    std::stable_sort(w.order.begin(), w.order.end(), [&](int a, int b) {
        const auto& ia = *w.clipped[static_cast<std::size_t>(a)];
        const auto& ib = *w.clipped[static_cast<std::size_t>(b)];
        return ia.l != ib.l ? ia.l < ib.l : ia.r > ib.r;
    });
    for (int y : w.order) {
        if (is_terminal[static_cast<std::size_t>(y)]) w.last_terminal = y;
    }
    return w;
}

ClassifyResult classify_window(const Window& w) {
    ClassifyResult out;
    out.last_terminal = w.last_terminal;
    const auto& zk = *w.clipped[static_cast<std::size_t>(w.last_terminal)];
    if (zk.l == 1) {
        out.instance_class = InstanceClass::E4;
        return out;
    }
    const int left = zk.l - 1;
    for (int y : w.order) {
        const auto& iv = *w.clipped[static_cast<std::size_t>(y)];
        if (y == w.last_terminal || !iv.contains(left)) continue;
        if (iv.r >= zk.r) {
            out.covering.push_back(y);
        } else if (iv.r >= zk.l) {
            out.short_of.push_back(y);
        }
    }
    if (!out.covering.empty() && out.short_of.empty()) {
        out.instance_class = InstanceClass::E1;
    } else if (out.covering.empty() && !out.short_of.empty()) {
        out.instance_class = InstanceClass::E2;
    } else if (!out.covering.empty()) {
        out.instance_class = InstanceClass::E3;
    } else {
        throw InternalInconsistency("no interval joins w_{u-1} to z_k; pruned window is disconnected");
    }
    return out;
}

bool less_inf(const std::optional<int>& a, const std::optional<int>& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
}

}  // namespace

ClassifyResult classify(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    auto mask = terminal_mask(graph, terminals);
    return classify_window(make_window(graph, mask));
}

std::optional<int> DpTable::F(int i, int j) const {
    auto it = cells.find({i, j});
    return it == cells.end() ? std::nullopt : it->second.value;
}

const DpEntry& DpTable::entry_of(int y) const {
    for (const auto& e : entries) {
        if (e.y == y) return e;
    }
    throw InvalidInput("y" + std::to_string(y) + " is outside the DP window");
}

DpTable compute_table(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    const auto is_terminal = terminal_mask(graph, terminals);
    const Window w = make_window(graph, is_terminal);
    const auto cls = classify_window(w);

    DpTable table;
    table.window_offset = w.offset;
    table.window_length = w.length;
    table.instance_class = cls.instance_class;
    table.last_terminal = w.last_terminal;

    auto b = [&](int y) { return is_terminal[static_cast<std::size_t>(y)] ? 0 : 1; };

    for (int z : w.order) {
        const auto& iz = *w.clipped[static_cast<std::size_t>(z)];
        DpEntry entry;
        entry.y = z;
        entry.i = iz.l;
        entry.j = iz.r;
        if (iz.l == 1) {
            entry.entry_case = EntryCase::Base;
            entry.f = b(z);
        } else {
            std::optional<int> best_c;
            std::optional<int> best_d;
            std::pair<int, int> cell_c{0, 0};
            std::pair<int, int> cell_d{0, 0};
            for (int y : w.order) {
                if (y == z) continue;
                const auto& iv = *w.clipped[static_cast<std::size_t>(y)];
                if (!iv.contains(iz.l - 1) || iv.r < iz.l) continue;
                ++table.predecessor_reads;
                if (iv.l >= iz.l) table.reads_were_earlier_rows = false;
                auto value = table.F(iv.l, iv.r);
                if (iv.r >= iz.r) {
                    if (less_inf(value, best_c)) {
                        best_c = value;
                        cell_c = {iv.l, iv.r};
                    }
                } else if (less_inf(value, best_d)) {
                    best_d = value;
                    cell_d = {iv.l, iv.r};
                }
            }
            std::optional<int> via_c = best_c ? std::optional<int>(1 + *best_c) : std::nullopt;
            std::optional<int> via_d = best_d ? std::optional<int>(1 + b(z) + *best_d) : std::nullopt;
            if (cell_c.first && cell_d.first) {
                entry.entry_case = EntryCase::Case3;
            } else if (cell_d.first) {
                entry.entry_case = EntryCase::Case2;
            } else {
                entry.entry_case = EntryCase::Case1;
            }
            if (via_c && !less_inf(via_d, via_c)) {
                entry.f = via_c;
                entry.branch = 'c';
                std::tie(entry.pred_i, entry.pred_j) = cell_c;
            } else if (via_d) {
                entry.f = via_d;
                entry.branch = 'd';
                std::tie(entry.pred_i, entry.pred_j) = cell_d;
            }
        }
        auto& cell = table.cells[{entry.i, entry.j}];
        if (cell.argmin_y == 0 || less_inf(entry.f, cell.value)) {
            cell.value = entry.f;
            cell.argmin_y = z;
            ++table.cell_updates;
        }
        table.entries.push_back(entry);
    }

    if (cls.instance_class == InstanceClass::E4) {
        table.final_value = 1;
    } else {
        table.final_value = table.entry_of(w.last_terminal).f;
        if (!table.final_value) throw InternalInconsistency("last terminal unreachable in DP table");
    }
    return table;
}

SteinerResult reconstruct(const DpTable& table, const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    const auto is_terminal = terminal_mask(graph, terminals);
    SteinerResult result;
    result.terminal_case = TerminalCase::SubsetY;
    result.method = "table_dp";
    std::vector<DpStep> steps;
    std::vector<Vertex> term_vertices;
    for (int y : terminals) term_vertices.push_back(yv(y));

    if (terminals.size() <= 1) {
        result.trace = std::move(steps);
        finalize_result(graph, term_vertices, result, false);
        return result;
    }

    VertexSet chosen;
    auto add = [&](const Vertex& v, DpStep& step) {
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) return;
        chosen.push_back(v);
        step.added.push_back(v);
    };

    if (table.instance_class == InstanceClass::E4) {
        DpStep step{table.last_terminal, 1, 0, "e4", {}};
        add(xv(table.window_offset), step);
        steps.push_back(std::move(step));
    } else {
        const DpEntry* cur = &table.entry_of(table.last_terminal);
        for (std::size_t guard = 0; guard <= table.entries.size(); ++guard) {
            DpStep step{cur->y, cur->i, cur->j, {}, {}};
            const bool non_terminal = !is_terminal[static_cast<std::size_t>(cur->y)];
            if (cur->entry_case == EntryCase::Base) {
                step.kind = "base";
                if (non_terminal) add(yv(cur->y), step);
                steps.push_back(std::move(step));
                break;
            }
            step.kind = std::string(1, cur->branch);
            add(xv(table.window_offset + cur->i - 1), step);
            if (cur->branch == 'd' && non_terminal) add(yv(cur->y), step);
            steps.push_back(std::move(step));
            if (cur->branch == ' ') throw InternalInconsistency("back-pointer missing on a non-base entry");
            auto it = table.cells.find({cur->pred_i, cur->pred_j});
            if (it == table.cells.end()) throw InternalInconsistency("dangling back-pointer");
            cur = &table.entry_of(it->second.argmin_y);
        }
    }

    // Patch: terminals the walk never touched get l(z) added, except the
    // σ-earliest member of a run of pairwise overlapping uncovered terminals.
    const auto sigma = sigma_order(graph);
    std::vector<int> uncovered;
    for (int y : sigma.order) {
        if (!is_terminal[static_cast<std::size_t>(y)]) continue;
        const auto& iv = graph.interval(y);
        bool touched = std::any_of(chosen.begin(), chosen.end(),
                                   [&](const Vertex& v) { return v.side == Side::X && iv.contains(v.id); });
        if (!touched) uncovered.push_back(y);
    }
    std::size_t start = 0;
    while (start < uncovered.size()) {
        std::size_t end = start + 1;
        while (end < uncovered.size() &&
               graph.interval(uncovered[end - 1]).r >= graph.interval(uncovered[end]).l) {
            ++end;
        }
        std::size_t first = end - start == 1 ? start : start + 1;
        for (std::size_t idx = first; idx < end; ++idx) {
            DpStep step{uncovered[idx], 0, 0, "patch", {}};
            add(xv(graph.interval(uncovered[idx]).l), step);
            steps.push_back(std::move(step));
        }
        start = end;
    }

    for (const auto& v : chosen) {
        if (v.side == Side::Y && is_terminal[static_cast<std::size_t>(v.id)]) continue;
        result.steiner_set.push_back(v);
    }
    result.trace = std::move(steps);
    finalize_result(graph, term_vertices, result, false);
    return result;
}

SteinerResult solve_subset_y_table(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    return reconstruct(compute_table(graph, terminals), graph, terminals);
}

std::string dump_table_tsv(const DpTable& table) {
    std::ostringstream out;
    out << "i\tj\ty\tcase\tf\tbranch\tpred\n";
    for (const auto& e : table.entries) {
        out << e.i << '\t' << e.j << "\ty" << e.y << '\t' << to_string(e.entry_case) << '\t';
        if (e.f) {
            out << *e.f;
        } else {
            out << "inf";
        }
        out << '\t' << (e.branch == ' ' ? '-' : e.branch) << '\t';
        if (e.pred_i) {
            out << "F[" << e.pred_i << ',' << e.pred_j << ']';
        } else {
            out << '-';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cbsteiner
