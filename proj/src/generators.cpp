#include "cbsteiner/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cbsteiner/errors.hpp"

namespace cbsteiner {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Interval> draw(std::mt19937_64& rng, int range, int count, double density) {
    const int max_len = std::clamp(static_cast<int>(std::lround(2.0 * density * range)) - 1, 1, range);
    std::vector<Interval> out;
    for (int i = 0; i < count; ++i) {
        int len = uniform(rng, 1, max_len);
        int l = uniform(rng, 1, range - len + 1);
        out.push_back({l, l + len - 1});
    }
    return out;
}

// Positions p in [lo, hi) with no interval holding both p and p+1.
std::vector<int> cuts(const std::vector<Interval>& ivs, int lo, int hi) {
    std::vector<int> diff(static_cast<std::size_t>(hi - lo) + 2, 0);
    for (const auto& iv : ivs) {
        int a = std::max(iv.l, lo);
        int b = std::min(iv.r - 1, hi - 1);
        if (a > b) continue;
        ++diff[static_cast<std::size_t>(a - lo)];
        --diff[static_cast<std::size_t>(b - lo) + 1];
    }
    std::vector<int> out;
    int run = 0;
    for (int p = lo; p < hi; ++p) {
        run += diff[static_cast<std::size_t>(p - lo)];
        if (run == 0) out.push_back(p);
    }
    return out;
}

// Widens a random interval by one toward its nearest cut until none remain.
void repair(std::mt19937_64& rng, std::vector<Interval>& ivs, int lo, int hi) {
    for (auto c = cuts(ivs, lo, hi); !c.empty(); c = cuts(ivs, lo, hi)) {
        auto& iv = ivs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ivs.size()) - 1))];
        int best_right = -1;
        int best_left = -1;
        for (int p : c) {
            if (p >= iv.r && (best_right < 0 || p - iv.r < best_right - iv.r)) best_right = p;
            if (p < iv.l && (best_left < 0 || iv.l - 1 - p < iv.l - 1 - best_left)) best_left = p;
        }
        if (best_right >= 0 && (best_left < 0 || best_right - iv.r <= iv.l - 1 - best_left)) {
            ++iv.r;
        } else {
            --iv.l;
        }
    }
}

std::vector<int> pick(std::mt19937_64& rng, int universe, int k) {
    std::vector<int> all(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(uniform(rng, i, universe - 1))]);
    }
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

std::vector<Interval> gen_intervals(const GenConfig& cfg) {
    if (cfg.m < 1 || cfg.n < 1) throw InvalidInput("generator needs m >= 1 and n >= 1");
    if (!(cfg.density > 0.0 && cfg.density <= 1.0)) throw InvalidInput("density must lie in (0, 1]");
    std::mt19937_64 rng(cfg.seed);
    auto ivs = draw(rng, cfg.m, cfg.n, cfg.density);
    if (cfg.connect) repair(rng, ivs, 1, cfg.m);
    return ivs;
}

ConvexBipartiteGraph gen_convex_bipartite(const GenConfig& cfg) { return ConvexBipartiteGraph(cfg.m, gen_intervals(cfg)); }

IntervalGraphModel gen_interval_family(const GenConfig& cfg) {
    if (cfg.n < 1) throw InvalidInput("generator needs n >= 1");
    if (!(cfg.density > 0.0 && cfg.density <= 1.0)) throw InvalidInput("density must lie in (0, 1]");
    const int range = std::max(cfg.m, 2);
    std::mt19937_64 rng(cfg.seed);
    auto ivs = draw(rng, range, cfg.n, cfg.density);
    if (cfg.connect) {
        int lo = ivs.front().l;
        int hi = ivs.front().r;
        for (const auto& iv : ivs) {
            lo = std::min(lo, iv.l);
            hi = std::max(hi, iv.r);
        }
        repair(rng, ivs, lo, hi);
    }
    return IntervalGraphModel(std::move(ivs));
}

GeneralGraph gen_general_graph(std::uint64_t seed, int vertices, double edge_probability) {
    if (vertices < 2) throw InvalidInput("random graph needs at least two vertices");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::clamp(edge_probability, 0.0, 1.0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= vertices; ++u) {
        for (int v = u + 1; v <= vertices; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    if (edges.empty()) {
        int u = uniform(rng, 1, vertices - 1);
        edges.emplace_back(u, uniform(rng, u + 1, vertices));
    }
    return GeneralGraph(vertices, std::move(edges));
}

TerminalSpec gen_terminals(const ConvexBipartiteGraph& graph, TerminalCase terminal_case, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int m = graph.m();
    const int n = graph.n();
    TerminalSpec spec;
    spec.terminal_case = terminal_case;
    auto push = [&](Side side, const std::vector<int>& ids) {
        for (int id : ids) spec.terminals.push_back({side, id});
    };
    switch (terminal_case) {
        case TerminalCase::AllX: push(Side::X, pick(rng, m, m)); break;
        case TerminalCase::AllY: push(Side::Y, pick(rng, n, n)); break;
        case TerminalCase::SubsetX:
            if (m < 2) throw InfeasibleRequest("subset_x needs m >= 2");
            push(Side::X, pick(rng, m, uniform(rng, 1, m - 1)));
            break;
        case TerminalCase::SubsetY:
            if (n < 2) throw InfeasibleRequest("subset_y needs n >= 2");
            push(Side::Y, pick(rng, n, uniform(rng, 1, n - 1)));
            break;
        case TerminalCase::Mixed: {
            int kx = uniform(rng, 1, m);
            int ky = uniform(rng, 1, n);
            push(Side::X, pick(rng, m, kx));
            push(Side::Y, pick(rng, n, ky));
            break;
        }
    }
    spec.terminals = make_vertex_set(std::move(spec.terminals));
    return spec;
}

}  // namespace cbsteiner
