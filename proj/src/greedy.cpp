#include "cbsteiner/greedy.hpp"

#include <algorithm>
#include <numeric>

#include "cbsteiner/errors.hpp"

namespace cbsteiner {

namespace {

std::vector<Vertex> all_x_terminals(const ConvexBipartiteGraph& graph) {
    std::vector<Vertex> r;
    for (int p = 1; p <= graph.m(); ++p) r.push_back(xv(p));
    return r;
}

std::vector<Vertex> all_y_terminals(const ConvexBipartiteGraph& graph) {
    std::vector<Vertex> r;
    for (int y = 1; y <= graph.n(); ++y) r.push_back(yv(y));
    return r;
}

}  // namespace

SteinerResult solve_all_x(const ConvexBipartiteGraph& graph) {
    SteinerResult result;
    result.terminal_case = TerminalCase::AllX;
    result.method = "greedy_all_x";
    std::vector<AllXStep> steps;

    if (graph.m() > 1) {
        const auto w = far_reach_table(graph);
        int z = 1;
        for (;;) {
            int wz = w[static_cast<std::size_t>(z)];
            int reach = graph.interval(wz).r;
            steps.push_back({z, wz, reach});
            result.steiner_set.push_back(yv(wz));
            if (reach == graph.m()) break;
            if (reach <= z) throw InternalInconsistency("R = X walk made no progress at x" + std::to_string(z));
            z = reach;
        }
    }
    result.trace = std::move(steps);
    finalize_result(graph, all_x_terminals(graph), result);
    return result;
}

SteinerResult solve_subset_x(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    if (terminals.empty()) throw InvalidInput("R ⊂ X needs at least one terminal");
    for (std::size_t i = 0; i < terminals.size(); ++i) {
        if (terminals[i] < 1 || terminals[i] > graph.m()) {
            throw InvalidInput("terminal position out of range: " + std::to_string(terminals[i]));
        }
        if (i > 0 && terminals[i] <= terminals[i - 1]) {
            throw InvalidInput("terminal positions must be strictly increasing");
        }
    }
    if (static_cast<int>(terminals.size()) == graph.m()) {
        throw InvalidInput("R = X: use solve_all_x");
    }

    SteinerResult result;
    result.terminal_case = TerminalCase::SubsetX;
    result.method = "greedy_subset_x";
    std::vector<Vertex> term_vertices;
    for (int z : terminals) term_vertices.push_back(xv(z));

    std::vector<SubsetXStep> steps;
    const int k = static_cast<int>(terminals.size());
    if (k >= 2) {
        const auto w = far_reach_table(graph);
        auto w_of = [&](int p) { return w[static_cast<std::size_t>(p)]; };
        auto reach = [&](int p) { return graph.interval(w_of(p)).r; };
        // 0-based index of the greatest terminal inside interval y
        auto greatest_terminal_in = [&](int y) {
            const auto& iv = graph.interval(y);
            auto it = std::upper_bound(terminals.begin(), terminals.end(), iv.r);
            return static_cast<int>(it - terminals.begin()) - 1;
        };

        VertexSet chosen;
        auto add = [&](const Vertex& v) {
            auto it = std::lower_bound(chosen.begin(), chosen.end(), v);
            if (it == chosen.end() || *it != v) chosen.insert(it, v);
        };

        int z = terminals[0];
        add(yv(w_of(z)));
        int j = greatest_terminal_in(w_of(z));
        int iteration = 0;
        while (j < k - 1) {
            SubsetXStep step;
            step.iteration = ++iteration;
            step.z = z;
            step.zj = terminals[static_cast<std::size_t>(j)];
            const int next = terminals[static_cast<std::size_t>(j) + 1];
            step.next_terminal = next;

            int p = reach(z);
            int q = terminals[static_cast<std::size_t>(j)];
            step.p_start = p;
            step.q_start = q;
            if (p != q) step.s1.push_back(xv(p));

            auto holds_next = [&](int pos) { return graph.interval(w_of(pos)).contains(next); };
            while (!holds_next(p)) {
                int y = w_of(p);
                int r = graph.interval(y).r;
                if (r <= p) throw InternalInconsistency("S1 walk stalled at x" + std::to_string(p));
                step.s1.push_back(yv(y));
                step.s1.push_back(xv(r));
                p = r;
            }
            while (!holds_next(q)) {
                int y = w_of(q);
                int r = graph.interval(y).r;
                if (r <= q) throw InternalInconsistency("S2 walk stalled at x" + std::to_string(q));
                step.s2.push_back(yv(y));
                step.s2.push_back(xv(r));
                q = r;
            }

            step.took_s1 = step.s1.size() < step.s2.size();
            const auto& path = step.took_s1 ? step.s1 : step.s2;
            const int end = step.took_s1 ? p : q;
            for (const auto& v : path) {
                if (!std::binary_search(chosen.begin(), chosen.end(), v)) step.added.push_back(v);
                add(v);
            }
            Vertex connector = yv(w_of(end));
            if (!std::binary_search(chosen.begin(), chosen.end(), connector)) step.added.push_back(connector);
            add(connector);
            z = end;
            int nj = greatest_terminal_in(w_of(end));
            if (nj <= j) throw InternalInconsistency("R ⊂ X walk did not advance past terminal " + std::to_string(j));
            j = nj;
            steps.push_back(std::move(step));
        }
        for (const auto& v : chosen) {
            if (v.side == Side::X && std::binary_search(terminals.begin(), terminals.end(), v.id)) continue;
            result.steiner_set.push_back(v);
        }
    }
    result.trace = std::move(steps);
    finalize_result(graph, term_vertices, result);
    return result;
}

SteinerResult solve_all_y(const ConvexBipartiteGraph& graph) {
    SteinerResult result;
    result.terminal_case = TerminalCase::AllY;
    result.method = "greedy_all_y";
    std::vector<AllYStep> steps;
    const int n = graph.n();

    if (n > 1) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& ia = graph.interval(a);
            const auto& ib = graph.interval(b);
            return ia.r != ib.r ? ia.r < ib.r : ia.l < ib.l;
        });

        std::vector<char> marked(static_cast<std::size_t>(n) + 1, 0);
        // Marking by position: every unmarked interval containing pos.
        auto mark_at = [&](int pos) {
            std::vector<int> fresh;
            for (int y = 1; y <= n; ++y) {
                if (!marked[static_cast<std::size_t>(y)] && graph.interval(y).contains(pos)) {
                    marked[static_cast<std::size_t>(y)] = 1;
                    fresh.push_back(y);
                }
            }
            return fresh;
        };
        auto marked_holds = [&](int pos) {
            for (int y = 1; y <= n; ++y) {
                if (marked[static_cast<std::size_t>(y)] && graph.interval(y).contains(pos)) return true;
            }
            return false;
        };

        for (int i = 0; i < n; ++i) {
            AllYStep step;
            step.iteration = i + 1;
            step.y = order[static_cast<std::size_t>(i)];
            step.r = graph.interval(step.y).r;
            bool take = false;
            if (!marked[static_cast<std::size_t>(step.y)]) {
                step.action = MarkAction::AddUnmarked;
                take = true;
            } else if (step.r == graph.m()) {
                step.action = MarkAction::SkipLast;
            } else {
                // r_{i+1} for i = n does not exist; the test is taken as false
                bool covered = i + 1 < n && marked_holds(graph.interval(order[static_cast<std::size_t>(i) + 1]).r);
                step.action = covered ? MarkAction::SkipCovered : MarkAction::AddUncovered;
                take = !covered;
            }
            if (take) {
                step.added = step.r;
                step.newly_marked = mark_at(step.r);
                result.steiner_set.push_back(xv(step.r));
            }
            steps.push_back(std::move(step));
        }
    }
    result.trace = std::move(steps);
    finalize_result(graph, all_y_terminals(graph), result);
    return result;
}

}  // namespace cbsteiner
