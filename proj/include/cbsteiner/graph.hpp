#pragma once

// Graph representations shared by every solver.
//
// Index conventions: X positions are 1..m in the convex ordering, Y vertices
// are 1..n, GeneralGraph / IntervalGraphModel vertices are 1..n. Only
// SimpleGraph (the internal search graph used by BFS checks and the oracle) is
// 0-based.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cbsteiner {

enum class Side : std::uint8_t { X, Y };

struct Vertex {
    Side side = Side::X;
    int id = 0;

    auto operator<=>(const Vertex&) const = default;
};

inline Vertex xv(int position) { return {Side::X, position}; }
inline Vertex yv(int index) { return {Side::Y, index}; }

std::string to_string(const Vertex& v);

// Sorted, duplicate-free.
using VertexSet = std::vector<Vertex>;
VertexSet make_vertex_set(std::vector<Vertex> vertices);

using Edge = std::pair<Vertex, Vertex>;

struct Interval {
    int l = 0;
    int r = 0;

    bool contains(int p) const noexcept { return l <= p && p <= r; }
    int length() const noexcept { return r - l + 1; }
    auto operator<=>(const Interval&) const = default;
};

// Plain undirected graph over 0..size()-1, used for reachability checks and
// brute-force search. Adjacency lists are sorted.
class SimpleGraph {
public:
    explicit SimpleGraph(int vertex_count = 0);

    void add_edge(int u, int v);
    int size() const noexcept { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const;

    // BFS over the subgraph induced by `members`.
    bool induced_connected(std::span<const int> members) const;
    bool connected() const;

private:
    std::vector<std::vector<int>> adj_;
};

struct ValidationReport {
    bool intervals_ok = true;
    bool connected = false;
    std::vector<std::string> violations;

    bool ok() const noexcept { return intervals_ok && connected; }
};

// Structural check of raw interval data: bounds, then connectivity of the
// induced bipartite graph (reported only when the bounds are sane).
ValidationReport validate_convex(int m, std::span<const Interval> intervals);

// Convex bipartite graph: X = x_1..x_m in convex order, y_i adjacent to x_p
// iff l_i <= p <= r_i. Immutable; construction validates bounds and
// connectivity.
class ConvexBipartiteGraph {
public:
    ConvexBipartiteGraph(int m, std::vector<Interval> intervals);

    int m() const noexcept { return m_; }
    int n() const noexcept { return static_cast<int>(intervals_.size()); }
    int vertex_count() const noexcept { return m_ + n(); }

    const Interval& interval(int y) const;
    std::span<const Interval> intervals() const noexcept { return intervals_; }

    bool adjacent(int x, int y) const { return interval(y).contains(x); }
    bool contains(const Vertex& v) const noexcept;
    std::vector<int> neighbors_of_x(int x) const;

    // x_p -> p-1, y_i -> m+i-1.
    int simple_id(const Vertex& v) const;
    Vertex vertex_of(int simple_id) const;
    SimpleGraph to_simple() const;

    std::vector<Edge> edges() const;

private:
    int m_;
    std::vector<Interval> intervals_;
};

Interval interval_bounds(const ConvexBipartiteGraph& graph, int y);

struct FarReach {
    int w = 0;               // chosen representative of T(x)
    std::vector<int> t_set;  // all neighbours of x with maximum right end
};

// T(x) is the argmax of r over N(x); ties resolve to the largest Y index.
FarReach far_reach(const ConvexBipartiteGraph& graph, int x);

// w(x) for every x = 1..m in O(m + n); entry 0 unused.
std::vector<int> far_reach_table(const ConvexBipartiteGraph& graph);

// Induced connectivity on the convex graph via the interval chain criterion:
// every chosen interval holds a chosen position and every consecutive pair
// of chosen positions shares a chosen interval.
bool induced_connected(const ConvexBipartiteGraph& graph, std::span<const Vertex> vertices);

// Bipartite graph with arbitrary (not necessarily consecutive) neighbourhoods.
// X ids 1..x_count, Y ids 1..y_count.
class BipartiteGraph {
public:
    BipartiteGraph(int x_count, std::vector<std::vector<int>> y_neighbors);

    int x_count() const noexcept { return x_count_; }
    int y_count() const noexcept { return static_cast<int>(y_neighbors_.size()); }
    const std::vector<int>& neighbors_of_y(int y) const;

    int simple_id(const Vertex& v) const;
    Vertex vertex_of(int simple_id) const;
    SimpleGraph to_simple() const;

private:
    int x_count_;
    std::vector<std::vector<int>> y_neighbors_;
};

BipartiteGraph to_bipartite(const ConvexBipartiteGraph& graph);
bool induced_connected(const BipartiteGraph& graph, std::span<const Vertex> vertices);

// Undirected simple graph with vertices 1..vertex_count.
class GeneralGraph {
public:
    GeneralGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    // vertex v -> v-1
    SimpleGraph to_simple() const;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

bool induced_connected(const GeneralGraph& graph, std::span<const int> vertices);

// Integer-endpoint interval family; vertex v_i owns intervals()[i-1].
class IntervalGraphModel {
public:
    explicit IntervalGraphModel(std::vector<Interval> intervals);

    int size() const noexcept { return static_cast<int>(intervals_.size()); }
    const Interval& interval(int v) const;
    std::span<const Interval> intervals() const noexcept { return intervals_; }

    GeneralGraph intersection_graph() const;

private:
    std::vector<Interval> intervals_;
};

// Imaginary k-star caterpillar on an X side: a backbone path plus k pendant
// leaves per backbone vertex (k = 0 gives a plain path).
struct CaterpillarStructure {
    int k = 0;
    std::vector<int> backbone;
    std::map<int, std::vector<int>> pendants;
};

// True iff N(y) induces a nonempty subtree of the caterpillar for every y.
// Throws InvalidInput when the structure does not span X exactly or does not
// carry exactly k pendants per backbone vertex.
bool validate_k_star_caterpillar_convex(const BipartiteGraph& graph, const CaterpillarStructure& structure,
                                        int k);

CaterpillarStructure path_caterpillar(int x_count);

}  // namespace cbsteiner
