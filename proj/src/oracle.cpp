#include "cbsteiner/oracle.hpp"

#include <algorithm>
#include <map>

#include "cbsteiner/errors.hpp"

namespace cbsteiner {

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
template <typename F>
bool for_each_combination(int n, int k, F&& visit) {
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
}

class ConnectivityProbe {
public:
    explicit ConnectivityProbe(const SimpleGraph& g)
        : g_(g), in_(static_cast<std::size_t>(g.size()), 0), seen_(static_cast<std::size_t>(g.size()), 0) {}

    bool connected(const std::vector<int>& members) {
        if (members.empty()) return true;
        for (int v : members) in_[static_cast<std::size_t>(v)] = 1;
        stack_.assign(1, members.front());
        seen_[static_cast<std::size_t>(members.front())] = 1;
        std::size_t reached = 1;
        while (!stack_.empty()) {
            int u = stack_.back();
            stack_.pop_back();
            for (int w : g_.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (in_[wi] && !seen_[wi]) {
                    seen_[wi] = 1;
                    ++reached;
                    stack_.push_back(w);
                }
            }
        }
        for (int v : members) {
            in_[static_cast<std::size_t>(v)] = 0;
            seen_[static_cast<std::size_t>(v)] = 0;
        }
        return reached == members.size();
    }

private:
    const SimpleGraph& g_;
    std::vector<char> in_;
    std::vector<char> seen_;
    std::vector<int> stack_;
};

std::vector<int> checked_terminals(const SimpleGraph& graph, std::span<const int> terminals) {
    if (terminals.empty()) throw InvalidInput("terminal set is empty");
    std::vector<int> r(terminals.begin(), terminals.end());
    std::sort(r.begin(), r.end());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0 || r[i] >= graph.size()) throw InvalidInput("terminal out of range: " + std::to_string(r[i]));
        if (i > 0 && r[i] == r[i - 1]) throw InvalidInput("duplicate terminal " + std::to_string(r[i]));
    }
    return r;
}

OracleResult steiner_search(const SimpleGraph& graph, const std::vector<int>& r, const std::vector<int>& candidates) {
    OracleResult out;
    ConnectivityProbe probe(graph);
    std::vector<int> members;
    {
        std::vector<int> all(r);
        all.insert(all.end(), candidates.begin(), candidates.end());
        if (!probe.connected(all)) throw InfeasibleRequest("terminals lie in different components");
    }
    const int c = static_cast<int>(candidates.size());
    for (int k = 0; k <= c; ++k) {
        bool found = for_each_combination(c, k, [&](const std::vector<int>& idx) {
            ++out.explored;
            members = r;
            for (int i : idx) members.push_back(candidates[static_cast<std::size_t>(i)]);
            if (!probe.connected(members)) return false;
            out.optimum = k;
            out.witness.clear();
            for (int i : idx) out.witness.push_back(candidates[static_cast<std::size_t>(i)]);
            return true;
        });
        if (found) return out;
    }
    throw InternalInconsistency("exhaustive Steiner search found no solution");
}

VertexOracleResult to_vertices(const OracleResult& raw, auto&& vertex_of) {
    VertexOracleResult out{raw.optimum, {}, raw.explored};
    for (int id : raw.witness) out.witness.push_back(vertex_of(id));
    out.witness = make_vertex_set(std::move(out.witness));
    return out;
}

std::vector<int> to_simple_ids(std::span<const Vertex> terminals, auto&& simple_id) {
    std::vector<int> ids;
    for (const auto& v : terminals) ids.push_back(simple_id(v));
    return ids;
}

}  // namespace

OracleResult min_steiner_brute(const SimpleGraph& graph, std::span<const int> terminals) {
    const auto r = checked_terminals(graph, terminals);
    std::vector<char> is_terminal(static_cast<std::size_t>(graph.size()), 0);
    for (int t : r) is_terminal[static_cast<std::size_t>(t)] = 1;
    if (r.size() == 1) return OracleResult{0, {}, 1};

    std::map<std::vector<int>, int> classes;
    std::vector<int> candidates;
    for (int v = 0; v < graph.size(); ++v) {
        if (is_terminal[static_cast<std::size_t>(v)]) continue;
        if (classes.emplace(graph.neighbors(v), v).second) candidates.push_back(v);
    }
    if (static_cast<int>(candidates.size()) > kMaxSteinerCandidates) {
        throw OracleScaleExceeded("Steiner oracle: " + std::to_string(candidates.size()) + " candidate classes exceed " +
                                  std::to_string(kMaxSteinerCandidates));
    }
    return steiner_search(graph, r, candidates);
}

VertexOracleResult min_steiner_brute(const ConvexBipartiteGraph& graph, std::span<const Vertex> terminals) {
    auto raw = min_steiner_brute(graph.to_simple(),
                                 to_simple_ids(terminals, [&](const Vertex& v) { return graph.simple_id(v); }));
    return to_vertices(raw, [&](int id) { return graph.vertex_of(id); });
}

VertexOracleResult min_steiner_brute(const BipartiteGraph& graph, std::span<const Vertex> terminals) {
    auto raw = min_steiner_brute(graph.to_simple(),
                                 to_simple_ids(terminals, [&](const Vertex& v) { return graph.simple_id(v); }));
    return to_vertices(raw, [&](int id) { return graph.vertex_of(id); });
}

OracleResult min_steiner_brute(const GeneralGraph& graph, std::span<const int> terminals) {
    std::vector<int> ids;
    for (int v : terminals) {
        if (v < 1 || v > graph.vertex_count()) throw InvalidInput("terminal out of range: " + std::to_string(v));
        ids.push_back(v - 1);
    }
    auto raw = min_steiner_brute(graph.to_simple(), ids);
    for (int& v : raw.witness) ++v;
    return raw;
}

OracleResult min_steiner_powerset(const SimpleGraph& graph, std::span<const int> terminals) {
    if (graph.size() > 16) throw OracleScaleExceeded("power-set scan limited to 16 vertices");
    const auto r = checked_terminals(graph, terminals);
    std::vector<int> candidates;
    for (int v = 0; v < graph.size(); ++v) {
        if (!std::binary_search(r.begin(), r.end(), v)) candidates.push_back(v);
    }
    ConnectivityProbe probe(graph);
    OracleResult out;
    out.optimum = -1;
    const std::uint32_t limit = 1u << candidates.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        ++out.explored;
        std::vector<int> members(r);
        std::vector<int> chosen;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (mask >> i & 1u) chosen.push_back(candidates[i]);
        }
        if (out.optimum >= 0 && static_cast<int>(chosen.size()) > out.optimum) continue;
        members.insert(members.end(), chosen.begin(), chosen.end());
        if (!probe.connected(members)) continue;
        if (out.optimum < 0 || static_cast<int>(chosen.size()) < out.optimum ||
            (static_cast<int>(chosen.size()) == out.optimum && chosen < out.witness)) {
            out.optimum = static_cast<int>(chosen.size());
            out.witness = chosen;
        }
    }
    if (out.optimum < 0) throw InfeasibleRequest("terminals lie in different components");
    return out;
}

OracleResult min_vertex_cover_brute(const GeneralGraph& g) {
    const int n = g.vertex_count();
    if (n > kMaxBruteVertices) {
        throw OracleScaleExceeded("vertex cover oracle limited to " + std::to_string(kMaxBruteVertices) + " vertices");
    }
    OracleResult out;
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        bool found = for_each_combination(n, k, [&](const std::vector<int>& idx) {
            ++out.explored;
            std::fill(in.begin(), in.end(), 0);
            for (int i : idx) in[static_cast<std::size_t>(i) + 1] = 1;
            for (const auto& [u, v] : g.edges()) {
                if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)]) return false;
            }
            out.optimum = k;
            out.witness.clear();
            for (int i : idx) out.witness.push_back(i + 1);
            return true;
        });
        if (found) return out;
    }
    return out;
}

OracleResult min_dominating_brute(const SimpleGraph& graph) {
    const int n = graph.size();
    if (n > kMaxBruteVertices) {
        throw OracleScaleExceeded("dominating set oracle limited to " + std::to_string(kMaxBruteVertices) +
                                  " vertices");
    }
    OracleResult out;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int k = 0; k <= n; ++k) {
        bool found = for_each_combination(n, k, [&](const std::vector<int>& idx) {
            ++out.explored;
            std::fill(hit.begin(), hit.end(), 0);
            for (int i : idx) {
                hit[static_cast<std::size_t>(i)] = 1;
                for (int w : graph.neighbors(i)) hit[static_cast<std::size_t>(w)] = 1;
            }
            if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
            out.optimum = k;
            out.witness = idx;
            return true;
        });
        if (found) return out;
    }
    return out;
}

VertexOracleResult min_dominating_brute(const ConvexBipartiteGraph& graph) {
    auto raw = min_dominating_brute(graph.to_simple());
    return to_vertices(raw, [&](int id) { return graph.vertex_of(id); });
}

OracleResult min_dominating_brute(const GeneralGraph& graph) {
    auto raw = min_dominating_brute(graph.to_simple());
    for (int& v : raw.witness) ++v;
    return raw;
}

}  // namespace cbsteiner
