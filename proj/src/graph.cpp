#include "cbsteiner/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cbsteiner/errors.hpp"

namespace cbsteiner {

std::string to_string(const Vertex& v) { return (v.side == Side::X ? "x" : "y") + std::to_string(v.id); }

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

// ---------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(int vertex_count) : adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size() || u == v) {
        throw InvalidInput("bad edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    auto insert_sorted = [](std::vector<int>& list, int value) {
        auto it = std::lower_bound(list.begin(), list.end(), value);
        if (it == list.end() || *it != value) list.insert(it, value);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
}

bool SimpleGraph::adjacent(int u, int v) const {
    const auto& list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

bool SimpleGraph::induced_connected(std::span<const int> members) const {
    if (members.empty()) return true;
    std::vector<char> in_set(adj_.size(), 0);
    for (int v : members) {
        if (v < 0 || v >= size()) throw InvalidInput("vertex id out of range: " + std::to_string(v));
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{members.front()};
    seen[static_cast<std::size_t>(members.front())] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj_[static_cast<std::size_t>(u)]) {
            auto wi = static_cast<std::size_t>(w);
            if (in_set[wi] && !seen[wi]) {
                seen[wi] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    std::size_t distinct = 0;
    for (char c : in_set) distinct += static_cast<std::size_t>(c);
    return reached == distinct;
}

bool SimpleGraph::connected() const {
    std::vector<int> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return induced_connected(all);
}

// ------------------------------------------------------------ validate_convex

ValidationReport validate_convex(int m, std::span<const Interval> intervals) {
    ValidationReport report;
    if (m < 1) {
        report.intervals_ok = false;
        report.violations.push_back("m=" + std::to_string(m) + " < 1");
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        std::string name = "y" + std::to_string(i + 1);
        if (iv.l < 1) report.violations.push_back(name + ": l=" + std::to_string(iv.l) + " < 1");
        if (iv.l > iv.r)
            report.violations.push_back(name + ": l=" + std::to_string(iv.l) + " > r=" + std::to_string(iv.r));
        if (iv.r > m)
            report.violations.push_back(name + ": r=" + std::to_string(iv.r) + " > m=" + std::to_string(m));
    }
    if (!report.violations.empty()) {
        report.intervals_ok = false;
        return report;
    }
    // Connected iff every consecutive pair (p, p+1) lies in a common interval;
    // for m = 1 every y hangs off x_1.
    std::vector<int> cover(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& iv : intervals) {
        if (iv.r > iv.l) {
            cover[static_cast<std::size_t>(iv.l)] += 1;
            cover[static_cast<std::size_t>(iv.r)] -= 1;
        }
    }
    report.connected = true;
    int running = 0;
    for (int p = 1; p < m; ++p) {
        running += cover[static_cast<std::size_t>(p)];
        if (running == 0) {
            report.connected = false;
            report.violations.push_back("not connected: no interval joins x" + std::to_string(p) + " and x" +
                                        std::to_string(p + 1));
            break;
        }
    }
    return report;
}

// ------------------------------------------------------- ConvexBipartiteGraph

ConvexBipartiteGraph::ConvexBipartiteGraph(int m, std::vector<Interval> intervals)
    : m_(m), intervals_(std::move(intervals)) {
    auto report = validate_convex(m_, intervals_);
    if (!report.intervals_ok) throw InvalidInput("invalid convex bipartite graph: " + report.violations.front());
    if (!report.connected) throw DisconnectedGraph("convex bipartite graph is " + report.violations.front());
}

const Interval& ConvexBipartiteGraph::interval(int y) const {
    if (y < 1 || y > n()) throw InvalidInput("Y index out of range: " + std::to_string(y));
    return intervals_[static_cast<std::size_t>(y - 1)];
}

bool ConvexBipartiteGraph::contains(const Vertex& v) const noexcept {
    return v.side == Side::X ? (v.id >= 1 && v.id <= m_) : (v.id >= 1 && v.id <= n());
}

std::vector<int> ConvexBipartiteGraph::neighbors_of_x(int x) const {
    if (x < 1 || x > m_) throw InvalidInput("X position out of range: " + std::to_string(x));
    std::vector<int> out;
    for (int y = 1; y <= n(); ++y) {
        if (intervals_[static_cast<std::size_t>(y - 1)].contains(x)) out.push_back(y);
    }
    return out;
}

int ConvexBipartiteGraph::simple_id(const Vertex& v) const {
    if (!contains(v)) throw InvalidInput("vertex not in graph: " + to_string(v));
    return v.side == Side::X ? v.id - 1 : m_ + v.id - 1;
}

Vertex ConvexBipartiteGraph::vertex_of(int simple_id) const {
    if (simple_id < 0 || simple_id >= vertex_count()) throw InvalidInput("simple id out of range");
    return simple_id < m_ ? xv(simple_id + 1) : yv(simple_id - m_ + 1);
}

SimpleGraph ConvexBipartiteGraph::to_simple() const {
    SimpleGraph g(vertex_count());
    for (int y = 1; y <= n(); ++y) {
        const auto& iv = interval(y);
        for (int p = iv.l; p <= iv.r; ++p) g.add_edge(p - 1, m_ + y - 1);
    }
    return g;
}

std::vector<Edge> ConvexBipartiteGraph::edges() const {
    std::vector<Edge> out;
    for (int y = 1; y <= n(); ++y) {
        const auto& iv = interval(y);
        for (int p = iv.l; p <= iv.r; ++p) out.emplace_back(xv(p), yv(y));
    }
    return out;
}

Interval interval_bounds(const ConvexBipartiteGraph& graph, int y) { return graph.interval(y); }

FarReach far_reach(const ConvexBipartiteGraph& graph, int x) {
    if (x < 1 || x > graph.m()) throw InvalidInput("X position out of range: " + std::to_string(x));
    FarReach out;
    int best_r = 0;
    for (int y = 1; y <= graph.n(); ++y) {
        const auto& iv = graph.interval(y);
        if (!iv.contains(x)) continue;
        if (iv.r > best_r) {
            best_r = iv.r;
            out.t_set.clear();
        }
        if (iv.r == best_r) out.t_set.push_back(y);
    }
    if (out.t_set.empty()) throw DisconnectedGraph("x" + std::to_string(x) + " has no neighbour");
    out.w = out.t_set.back();
    return out;
}

std::vector<int> far_reach_table(const ConvexBipartiteGraph& graph) {
    const int m = graph.m();
    // best[p] = argmax (r, index) over intervals with l == p, then prefix max.
    std::vector<int> best(static_cast<std::size_t>(m) + 1, 0);
    auto better = [&](int a, int b) {
        if (b == 0) return true;
        const auto& ia = graph.interval(a);
        const auto& ib = graph.interval(b);
        return ia.r > ib.r || (ia.r == ib.r && a > b);
    };
    for (int y = 1; y <= graph.n(); ++y) {
        auto& slot = best[static_cast<std::size_t>(graph.interval(y).l)];
        if (better(y, slot)) slot = y;
    }
    std::vector<int> w(static_cast<std::size_t>(m) + 1, 0);
    int running = 0;
    for (int p = 1; p <= m; ++p) {
        int cand = best[static_cast<std::size_t>(p)];
        if (cand != 0 && better(cand, running)) running = cand;
        if (running == 0 || graph.interval(running).r < p) {
            throw DisconnectedGraph("x" + std::to_string(p) + " has no neighbour");
        }
        w[static_cast<std::size_t>(p)] = running;
    }
    return w;
}

bool induced_connected(const ConvexBipartiteGraph& graph, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw InvalidInput("induced_connected needs a nonempty vertex set");
    std::vector<int> points;
    std::vector<int> ys;
    for (const auto& v : vertices) {
        if (!graph.contains(v)) throw InvalidInput("vertex not in graph: " + to_string(v));
        (v.side == Side::X ? points : ys).push_back(v.id);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    if (points.empty()) return ys.size() <= 1;
    if (ys.empty()) return points.size() <= 1;

    // gap a joins points[a] and points[a+1]
    std::vector<int> gap_cover(points.size() + 1, 0);
    for (int y : ys) {
        const auto& iv = graph.interval(y);
        auto first = std::lower_bound(points.begin(), points.end(), iv.l);
        if (first == points.end() || *first > iv.r) return false;
        auto last = std::upper_bound(points.begin(), points.end(), iv.r) - 1;
        auto a = static_cast<std::size_t>(first - points.begin());
        auto b = static_cast<std::size_t>(last - points.begin());
        if (b > a) {
            gap_cover[a] += 1;
            gap_cover[b] -= 1;
        }
    }
    int running = 0;
    for (std::size_t a = 0; a + 1 < points.size(); ++a) {
        running += gap_cover[a];
        if (running == 0) return false;
    }
    return true;
}

// ------------------------------------------------------------ BipartiteGraph

BipartiteGraph::BipartiteGraph(int x_count, std::vector<std::vector<int>> y_neighbors)
    : x_count_(x_count), y_neighbors_(std::move(y_neighbors)) {
    if (x_count_ < 0) throw InvalidInput("negative X count");
    for (auto& list : y_neighbors_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (int x : list) {
            if (x < 1 || x > x_count_) throw InvalidInput("X id out of range: " + std::to_string(x));
        }
    }
}

const std::vector<int>& BipartiteGraph::neighbors_of_y(int y) const {
    if (y < 1 || y > y_count()) throw InvalidInput("Y index out of range: " + std::to_string(y));
    return y_neighbors_[static_cast<std::size_t>(y - 1)];
}

int BipartiteGraph::simple_id(const Vertex& v) const {
    if (v.side == Side::X) {
        if (v.id < 1 || v.id > x_count_) throw InvalidInput("vertex not in graph: " + to_string(v));
        return v.id - 1;
    }
    if (v.id < 1 || v.id > y_count()) throw InvalidInput("vertex not in graph: " + to_string(v));
    return x_count_ + v.id - 1;
}

Vertex BipartiteGraph::vertex_of(int simple_id) const {
    if (simple_id < 0 || simple_id >= x_count_ + y_count()) throw InvalidInput("simple id out of range");
    return simple_id < x_count_ ? xv(simple_id + 1) : yv(simple_id - x_count_ + 1);
}

SimpleGraph BipartiteGraph::to_simple() const {
    SimpleGraph g(x_count_ + y_count());
    for (int y = 1; y <= y_count(); ++y) {
        for (int x : neighbors_of_y(y)) g.add_edge(x - 1, x_count_ + y - 1);
    }
    return g;
}

BipartiteGraph to_bipartite(const ConvexBipartiteGraph& graph) {
    std::vector<std::vector<int>> lists;
    for (const auto& iv : graph.intervals()) {
        std::vector<int> list;
        for (int p = iv.l; p <= iv.r; ++p) list.push_back(p);
        lists.push_back(std::move(list));
    }
    return BipartiteGraph(graph.m(), std::move(lists));
}

bool induced_connected(const BipartiteGraph& graph, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw InvalidInput("induced_connected needs a nonempty vertex set");
    std::vector<int> ids;
    ids.reserve(vertices.size());
    for (const auto& v : vertices) ids.push_back(graph.simple_id(v));
    return graph.to_simple().induced_connected(ids);
}

// -------------------------------------------------------------- GeneralGraph

GeneralGraph::GeneralGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw InvalidInput("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges_) {
        if (u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_) {
            throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        }
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second) {
            throw InvalidInput("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
    }
}

SimpleGraph GeneralGraph::to_simple() const {
    SimpleGraph g(vertex_count_);
    for (const auto& [u, v] : edges_) g.add_edge(u - 1, v - 1);
    return g;
}

bool induced_connected(const GeneralGraph& graph, std::span<const int> vertices) {
    if (vertices.empty()) throw InvalidInput("induced_connected needs a nonempty vertex set");
    std::vector<int> ids;
    ids.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 1 || v > graph.vertex_count()) throw InvalidInput("vertex out of range: " + std::to_string(v));
        ids.push_back(v - 1);
    }
    return graph.to_simple().induced_connected(ids);
}

// -------------------------------------------------------- IntervalGraphModel

IntervalGraphModel::IntervalGraphModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].l > intervals_[i].r) {
            throw InvalidInput("interval v" + std::to_string(i + 1) + " has left > right");
        }
    }
}

const Interval& IntervalGraphModel::interval(int v) const {
    if (v < 1 || v > size()) throw InvalidInput("interval vertex out of range: " + std::to_string(v));
    return intervals_[static_cast<std::size_t>(v - 1)];
}

GeneralGraph IntervalGraphModel::intersection_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= size(); ++a) {
        for (int b = a + 1; b <= size(); ++b) {
            const auto& ia = interval(a);
            const auto& ib = interval(b);
            if (std::max(ia.l, ib.l) <= std::min(ia.r, ib.r)) edges.emplace_back(a, b);
        }
    }
    return GeneralGraph(size(), std::move(edges));
}

// ----------------------------------------------------------------- caterpillar

CaterpillarStructure path_caterpillar(int x_count) {
    CaterpillarStructure s;
    s.k = 0;
    for (int x = 1; x <= x_count; ++x) s.backbone.push_back(x);
    return s;
}

bool validate_k_star_caterpillar_convex(const BipartiteGraph& graph, const CaterpillarStructure& structure,
                                        int k) {
    if (k < 0) throw InvalidInput("k must be nonnegative");
    const int nx = graph.x_count();
    // parent[x] = backbone vertex a pendant hangs off; 0 for backbone vertices
    std::vector<int> parent(static_cast<std::size_t>(nx) + 1, -1);
    std::vector<int> backbone_index(static_cast<std::size_t>(nx) + 1, -1);
    auto claim = [&](int x) {
        if (x < 1 || x > nx) throw InvalidInput("caterpillar vertex out of range: " + std::to_string(x));
        if (parent[static_cast<std::size_t>(x)] != -1) {
            throw InvalidInput("caterpillar vertex listed twice: " + std::to_string(x));
        }
    };
    for (std::size_t i = 0; i < structure.backbone.size(); ++i) {
        int x = structure.backbone[i];
        claim(x);
        parent[static_cast<std::size_t>(x)] = 0;
        backbone_index[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
    for (const auto& [bb, leaves] : structure.pendants) {
        if (bb < 1 || bb > nx || backbone_index[static_cast<std::size_t>(bb)] < 0) {
            throw InvalidInput("pendant list attached to non-backbone vertex " + std::to_string(bb));
        }
        for (int leaf : leaves) {
            claim(leaf);
            parent[static_cast<std::size_t>(leaf)] = bb;
        }
    }
    for (int x = 1; x <= nx; ++x) {
        if (parent[static_cast<std::size_t>(x)] == -1) {
            throw InvalidInput("caterpillar does not span X: x" + std::to_string(x) + " missing");
        }
    }
    for (int bb : structure.backbone) {
        auto it = structure.pendants.find(bb);
        std::size_t count = it == structure.pendants.end() ? 0 : it->second.size();
        if (count != static_cast<std::size_t>(k)) {
            throw InvalidInput("backbone vertex " + std::to_string(bb) + " carries " + std::to_string(count) +
                               " pendants, expected " + std::to_string(k));
        }
    }

    std::vector<char> member(static_cast<std::size_t>(nx) + 1, 0);
    for (int y = 1; y <= graph.y_count(); ++y) {
        const auto& nbrs = graph.neighbors_of_y(y);
        if (nbrs.empty()) return false;
        for (int x : nbrs) member[static_cast<std::size_t>(x)] = 1;
        // a vertex subset of a tree induces a subtree iff it spans |N|-1 tree edges
        std::size_t inner_edges = 0;
        for (int x : nbrs) {
            int p = parent[static_cast<std::size_t>(x)];
            if (p > 0) {
                inner_edges += member[static_cast<std::size_t>(p)] ? 1 : 0;
            } else {
                auto i = static_cast<std::size_t>(backbone_index[static_cast<std::size_t>(x)]);
                if (i + 1 < structure.backbone.size() &&
                    member[static_cast<std::size_t>(structure.backbone[i + 1])]) {
                    ++inner_edges;
                }
            }
        }
        for (int x : nbrs) member[static_cast<std::size_t>(x)] = 0;
        if (inner_edges + 1 != nbrs.size()) return false;
    }
    return true;
}

}  // namespace cbsteiner
