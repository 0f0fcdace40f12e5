#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oppdc/error.hpp"

namespace oppdc {

/// Dense 0-based vertex index.
using VertexId = std::uint32_t;

/// Unordered edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;
};

/// Directed arc of the symmetric orientation.
struct Arc {
    VertexId from = 0;
    VertexId to = 0;

    auto operator<=>(const Arc&) const = default;
    bool operator==(const Arc&) const = default;
};

inline std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

inline std::string to_string(const Arc& a) {
    return std::to_string(a.from) + "->" + std::to_string(a.to);
}

/// Simple undirected graph. Immutable once built; every "modification"
/// helper below returns a new graph.
///
/// The symmetric orientation is implicit: every edge {u,v} stands for the
/// arcs u->v and v->u.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t order) : adjacency_(order) {}

    /// Throws InputError on loops, repeated edges, or endpoints >= order.
    Graph(std::size_t order, std::span<const Edge> edges) : adjacency_(order) {
        edges_.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.u == e.v)
                throw InputError("loop at vertex " + std::to_string(e.u));
            if (e.v >= order)
                throw InputError("edge " + to_string(e) + " out of range for order " +
                                 std::to_string(order));
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) throw InputError("duplicate edge " + to_string(*dup));
        for (const Edge& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& row : adjacency_) std::sort(row.begin(), row.end());
    }

    Graph(std::size_t order, std::initializer_list<Edge> edges)
        : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    bool contains(VertexId v) const noexcept { return v < order(); }

    bool has_edge(VertexId a, VertexId b) const {
        if (a >= order() || b >= order() || a == b) return false;
        const auto& row = adjacency_[a];
        return std::binary_search(row.begin(), row.end(), b);
    }

    std::size_t min_degree() const {
        std::size_t d = order() == 0 ? 0 : adjacency_[0].size();
        for (const auto& row : adjacency_) d = std::min(d, row.size());
        return d;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& row : adjacency_) d = std::max(d, row.size());
        return d;
    }

    bool operator==(const Graph& other) const {
        return order() == other.order() && edges_ == other.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

/// A graph cut out of a parent graph, with the id maps both ways.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_parent;                // child id -> parent id
    std::vector<std::optional<VertexId>> to_child;  // parent id -> child id
};

/// Induced subgraph on `vertices`; child ids follow the order of `vertices`.
inline Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    Subgraph s;
    s.to_child.assign(g.order(), std::nullopt);
    for (VertexId v : vertices) {
        if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
        if (s.to_child[v]) throw InputError("vertex " + std::to_string(v) + " listed twice");
        s.to_child[v] = static_cast<VertexId>(s.to_parent.size());
        s.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (s.to_child[e.u] && s.to_child[e.v]) edges.emplace_back(*s.to_child[e.u], *s.to_child[e.v]);
    s.graph = Graph(s.to_parent.size(), edges);
    return s;
}

/// Subgraph on an explicit edge subset; keeps every vertex touched by an edge
/// plus any listed in `extra_vertices`, in increasing parent id order.
inline Subgraph edge_subgraph(const Graph& g, std::span<const Edge> edges,
                              std::span<const VertexId> extra_vertices = {}) {
    std::vector<char> keep(g.order(), 0);
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) throw InputError("edge " + to_string(e) + " not in graph");
        keep[e.u] = keep[e.v] = 1;
    }
    for (VertexId v : extra_vertices) keep.at(v) = 1;
    Subgraph s;
    s.to_child.assign(g.order(), std::nullopt);
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!keep[v]) continue;
        s.to_child[v] = static_cast<VertexId>(s.to_parent.size());
        s.to_parent.push_back(v);
    }
    std::vector<Edge> child_edges;
    child_edges.reserve(edges.size());
    for (const Edge& e : edges) child_edges.emplace_back(*s.to_child[e.u], *s.to_child[e.v]);
    s.graph = Graph(s.to_parent.size(), child_edges);
    return s;
}

inline Subgraph without_vertex(const Graph& g, VertexId v) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
    std::vector<VertexId> rest;
    for (VertexId u = 0; u < g.order(); ++u)
        if (u != v) rest.push_back(u);
    return induced_subgraph(g, rest);
}

inline Graph with_edges(const Graph& g, std::span<const Edge> extra, std::size_t order = 0) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(std::max(order, g.order()), edges);
}

inline Graph with_edge(const Graph& g, Edge e) { return with_edges(g, std::span<const Edge>(&e, 1)); }

inline Graph without_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
    return Graph(g.order(), edges);
}

/// Vertices of `h` are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    const auto shift = static_cast<VertexId>(g.order());
    for (const Edge& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
    return Graph(g.order() + h.order(), edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Cycle 0-1-...-(n-1)-0; n >= 3.
inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

/// K_{n,m}: sides 0..n-1 and n..n+m-1.
inline Graph complete_bipartite_graph(std::size_t n, std::size_t m) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < m; ++j) edges.emplace_back(i, static_cast<VertexId>(n + j));
    return Graph(n + m, edges);
}

inline bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - (g.order() ? 1 : 0)); }

/// K3 and K5, the two graphs known to have no cover.
inline bool is_known_exception(const Graph& g) {
    return (g.order() == 3 || g.order() == 5) && is_complete(g);
}

/// Relabels g by `perm` (old id -> new id).
inline Graph relabel(const Graph& g, std::span<const VertexId> perm) {
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.order(), edges);
}

}  // namespace oppdc
