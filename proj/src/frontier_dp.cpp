#include <algorithm>
#include <limits>

#include "cbsteiner/dp.hpp"
#include "cbsteiner/errors.hpp"

namespace cbsteiner {

namespace {

struct Cost {
    int total = std::numeric_limits<int>::max();
    int ys = 0;

    bool finite() const { return total != std::numeric_limits<int>::max(); }
    bool operator<(const Cost& o) const { return total != o.total ? total < o.total : ys < o.ys; }
};

struct Parent {
    int p = 0;
    int e = 0;
    int bought = 0;
};

}  // namespace

SteinerResult frontier_steiner(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    if (terminals.empty()) throw InvalidInput("terminal set is empty");
    const int m = graph.m();
    const int n = graph.n();
    std::vector<char> is_terminal(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> term_vertices;
    for (int y : terminals) {
        if (y < 1 || y > n) throw InvalidInput("terminal Y index out of range: " + std::to_string(y));
        if (is_terminal[static_cast<std::size_t>(y)]) throw InvalidInput("duplicate terminal y" + std::to_string(y));
        is_terminal[static_cast<std::size_t>(y)] = 1;
        term_vertices.push_back(yv(y));
    }

    SteinerResult result;
    result.terminal_case = static_cast<int>(terminals.size()) == n ? TerminalCase::AllY : TerminalCase::SubsetY;
    result.method = "frontier_dp";
    std::vector<FrontierStep> steps;
    if (terminals.size() == 1) {
        result.trace = std::move(steps);
        finalize_result(graph, term_vertices, result);
        return result;
    }

    const auto M = static_cast<std::size_t>(m);
    // Per position p: best terminal reach and best buyable reach among
    // intervals starting at or before p; cap on the next point.
    std::vector<int> term_reach(M + 2, 0), buy_reach(M + 2, 0), buy_arg(M + 2, 0), limit(M + 2, m);
    int start_max = m;
    int end_min = 1;
    for (int y = 1; y <= n; ++y) {
        const auto& iv = graph.interval(y);
        auto l = static_cast<std::size_t>(iv.l);
        if (is_terminal[static_cast<std::size_t>(y)]) {
            term_reach[l] = std::max(term_reach[l], iv.r);
            start_max = std::min(start_max, iv.r);
            end_min = std::max(end_min, iv.l);
            // points after p must stop at r for every terminal starting past p
            limit[l - 1] = std::min(limit[l - 1], iv.r);
        } else if (iv.r > buy_reach[l]) {
            buy_reach[l] = iv.r;
            buy_arg[l] = y;
        }
    }
    for (std::size_t p = 1; p <= M; ++p) {
        term_reach[p] = std::max(term_reach[p], term_reach[p - 1]);
        if (buy_reach[p - 1] > buy_reach[p]) {
            buy_reach[p] = buy_reach[p - 1];
            buy_arg[p] = buy_arg[p - 1];
        }
    }
    for (std::size_t p = M; p-- > 0;) limit[p] = std::min(limit[p], limit[p + 1]);

    const std::size_t width = M + 1;
    auto at = [&](int p, int e) { return static_cast<std::size_t>(p) * width + static_cast<std::size_t>(e); };
    std::vector<Cost> dist(width * width);
    std::vector<Parent> parent(width * width);
    for (int p = 1; p <= start_max; ++p) dist[at(p, 0)] = Cost{1, 0};

    auto relax = [&](int q, int e, Cost c, Parent from) {
        auto& d = dist[at(q, e)];
        if (c < d) {
            d = c;
            parent[at(q, e)] = from;
        }
    };

    Cost best;
    int best_p = 0;
    int best_e = 0;
    for (int p = 1; p <= m; ++p) {
        for (int e = 0; e <= m; ++e) {
            const Cost d = dist[at(p, e)];
            if (!d.finite()) continue;
            if (p >= end_min && d < best) {
                best = d;
                best_p = p;
                best_e = e;
            }
            const int free_reach = std::max(term_reach[static_cast<std::size_t>(p)], e);
            const int buy = buy_reach[static_cast<std::size_t>(p)];
            const int cap = std::min({limit[static_cast<std::size_t>(p)], std::max(free_reach, buy)});
            for (int q = p + 1; q <= cap; ++q) {
                if (q <= free_reach) relax(q, e >= q ? e : 0, Cost{d.total + 1, d.ys}, Parent{p, e, 0});
                if (q <= buy) {
                    relax(q, buy, Cost{d.total + 2, d.ys + 1}, Parent{p, e, buy_arg[static_cast<std::size_t>(p)]});
                }
            }
        }
    }
    if (!best.finite()) throw InternalInconsistency("frontier DP found no feasible point sequence");

    std::vector<FrontierStep> rev;
    int p = best_p;
    int e = best_e;
    while (p != 0) {
        const Parent& from = parent[at(p, e)];
        rev.push_back({p, from.bought});
        p = from.p;
        e = from.e;
    }
    steps.assign(rev.rbegin(), rev.rend());
    for (const auto& s : steps) {
        result.steiner_set.push_back(xv(s.position));
        if (s.bought) result.steiner_set.push_back(yv(s.bought));
    }
    result.trace = std::move(steps);
    finalize_result(graph, term_vertices, result);
    if (result.size() != best.total) throw InternalInconsistency("frontier DP witness size mismatch");
    return result;
}

SteinerResult solve_subset_y(const ConvexBipartiteGraph& graph, std::span<const int> terminals) {
    if (terminals.empty()) throw InvalidInput("R ⊂ Y needs at least one terminal");
    if (static_cast<int>(terminals.size()) >= graph.n()) throw InvalidInput("R = Y: use solve_all_y");
    return frontier_steiner(graph, terminals);
}

}  // namespace cbsteiner
