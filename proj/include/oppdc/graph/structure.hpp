#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "oppdc/graph/graph.hpp"

namespace oppdc {

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> components;
    std::vector<char> seen(g.order(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        components.emplace_back();
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            components.back().push_back(v);
            for (VertexId w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(components.back().begin(), components.back().end());
    }
    return components;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Component count of g with the listed edges ignored.
inline std::size_t component_count_without(const Graph& g, std::span<const Edge> removed) {
    std::vector<VertexId> parent(g.order());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t count = g.order();
    for (const Edge& e : g.edges()) {
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        VertexId a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

struct BlockDecomposition {
    /// Sorted vertex set per block. Isolated vertices are singleton blocks;
    /// bridges are two-vertex blocks.
    std::vector<std::vector<VertexId>> blocks;
    std::vector<std::vector<Edge>> block_edges;
    std::vector<VertexId> cut_vertices;
    /// Bipartite block-cut tree (forest, for disconnected graphs): for each
    /// block, the cut vertices it contains.
    std::vector<std::vector<VertexId>> block_cut_tree;

    bool is_cut_vertex(VertexId v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
};

/// Biconnected components (Hopcroft-Tarjan with an edge stack).
inline BlockDecomposition blocks(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> found;
    std::size_t timer = 0;

    std::function<void(VertexId, std::optional<VertexId>)> dfs = [&](VertexId v,
                                                                     std::optional<VertexId> parent) {
        disc[v] = low[v] = ++timer;
        std::size_t children = 0;
        for (VertexId w : g.neighbors(v)) {
            if (parent && w == *parent) continue;
            if (disc[w] == 0) {
                ++children;
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent || children > 1) is_cut[v] = 1;
                    std::vector<Edge> block;
                    const Edge stop(v, w);
                    while (true) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == stop) break;
                    }
                    found.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                low[v] = std::min(low[v], disc[w]);
                edge_stack.emplace_back(v, w);
            }
        }
        if (!parent && children > 1) is_cut[v] = 1;
    };

    std::vector<std::vector<VertexId>> isolated;
    for (VertexId v = 0; v < n; ++v) {
        if (disc[v] != 0) continue;
        if (g.degree(v) == 0) {
            disc[v] = ++timer;
            isolated.push_back({v});
            continue;
        }
        dfs(v, std::nullopt);
    }

    struct Entry {
        std::vector<VertexId> vertices;
        std::vector<Edge> edges;
    };
    std::vector<Entry> entries;
    for (auto& edges : found) {
        std::sort(edges.begin(), edges.end());
        std::vector<VertexId> vs;
        for (const Edge& e : edges) {
            vs.push_back(e.u);
            vs.push_back(e.v);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        entries.push_back({std::move(vs), std::move(edges)});
    }
    for (auto& iso : isolated) entries.push_back({std::move(iso), {}});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.vertices < b.vertices; });

    BlockDecomposition d;
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v]) d.cut_vertices.push_back(v);
    for (auto& e : entries) {
        std::vector<VertexId> cuts;
        for (VertexId v : e.vertices)
            if (is_cut[v]) cuts.push_back(v);
        d.block_cut_tree.push_back(std::move(cuts));
        d.blocks.push_back(std::move(e.vertices));
        d.block_edges.push_back(std::move(e.edges));
    }
    return d;
}

inline bool is_biconnected(const Graph& g) {
    if (g.order() < 3) return false;
    const auto d = blocks(g);
    return d.blocks.size() == 1;
}

struct ConnectivityReport {
    bool is_connected = false;
    std::vector<VertexId> cut_vertices;
    /// Bridges (size 1) followed by every disconnecting pair of non-bridge
    /// edges, each sorted, in lexicographic order. Empty for disconnected graphs.
    std::vector<std::vector<Edge>> edge_cuts_le2;
    /// min(edge connectivity, 3); 0 when disconnected.
    std::size_t edge_connectivity_capped = 0;
};

namespace detail {

/// Indices (into g.edges()) of the bridges of g with edge `skip` deleted;
/// skip = g.size() deletes nothing. Iterative lowpoint DFS.
inline std::vector<std::size_t> bridge_indices(const Graph& g, std::size_t skip) {
    const auto& edges = g.edges();
    auto index_of = [&](VertexId a, VertexId b) {
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge(a, b)) - edges.begin());
    };
    const std::size_t n = g.order();
    std::vector<std::size_t> tin(n, 0), low(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> out;
    std::size_t timer = 0;
    struct Frame {
        VertexId v;
        std::size_t via;  // edge index used to enter v
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        tin[root] = low[root] = timer++;
        stack.push_back({root, edges.size(), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const VertexId w = nb[f.next++];
                const std::size_t e = index_of(f.v, w);
                if (e == skip || e == f.via) continue;
                if (seen[w]) {
                    low[f.v] = std::min(low[f.v], tin[w]);
                } else {
                    seen[w] = 1;
                    tin[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) continue;
            const VertexId parent = stack.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] > tin[parent]) out.push_back(done.via);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Cut vertices plus all edge cuts of size at most two. A pair {e, f} of
/// non-bridges disconnects iff f is a bridge of g - e, so pairs come from
/// one bridge search per edge.
inline ConnectivityReport connectivity_report(const Graph& g) {
    ConnectivityReport r;
    r.is_connected = is_connected(g);
    r.cut_vertices = blocks(g).cut_vertices;
    if (!r.is_connected) return r;

    const auto& edges = g.edges();
    std::vector<char> bridge(edges.size(), 0);
    for (std::size_t i : detail::bridge_indices(g, edges.size())) {
        bridge[i] = 1;
        r.edge_cuts_le2.push_back({edges[i]});
    }
    const bool has_bridge = !r.edge_cuts_le2.empty();
    bool has_pair = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (bridge[i]) continue;
        for (std::size_t j : detail::bridge_indices(g, i)) {
            if (j <= i || bridge[j]) continue;
            r.edge_cuts_le2.push_back({edges[i], edges[j]});
            has_pair = true;
        }
    }
    r.edge_connectivity_capped = has_bridge ? 1 : has_pair ? 2 : 3;
    return r;
}

/// Vertex (u, v) of g x h is numbered u * |V(h)| + v.
inline VertexId product_vertex(VertexId u, VertexId v, std::size_t h_order) {
    return static_cast<VertexId>(u * h_order + v);
}

/// Cartesian product: (u,v) ~ (x,y) iff (u = x and vy in E(h)) or
/// (ux in E(g) and v = y). Row-major numbering, see product_vertex.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t nh = h.order();
    std::vector<Edge> edges;
    edges.reserve(g.order() * h.size() + nh * g.size());
    for (VertexId u = 0; u < g.order(); ++u)
        for (const Edge& e : h.edges())
            edges.emplace_back(product_vertex(u, e.u, nh), product_vertex(u, e.v, nh));
    for (const Edge& e : g.edges())
        for (VertexId v = 0; v < nh; ++v)
            edges.emplace_back(product_vertex(e.u, v, nh), product_vertex(e.v, v, nh));
    return Graph(g.order() * nh, edges);
}

}  // namespace oppdc
