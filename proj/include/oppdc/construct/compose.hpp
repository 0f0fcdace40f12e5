#pragma once

// Covers of graphs assembled from two pieces: gluing at one shared vertex,
// or joining with two vertex-disjoint bridge edges. Either piece may be
// literally K3 or K5, which has no cover of its own.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "oppdc/construct/basic.hpp"
#include "oppdc/construct/fixtures.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

/// One piece of a composition: a graph with a valid cover, or a bare K3/K5.
struct CoverSide {
    Graph graph;
    std::optional<PathCover> cover;

    static CoverSide covered(Graph g, PathCover c) { return {std::move(g), std::move(c)}; }
    static CoverSide exceptional(Graph g) { return {std::move(g), std::nullopt}; }
};

/// Result of a composition. The first piece keeps its ids; first_map and
/// second_map send each piece's ids to ids of `graph`.
struct Composite {
    Graph graph;
    PathCover cover;
    std::vector<VertexId> first_map;
    std::vector<VertexId> second_map;
};

namespace detail {

using Paths = std::vector<DiPath>;

inline std::size_t begin_of(const Paths& ps, VertexId v) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].front() == v) return i;
    throw ConstructionError("no path begins at " + std::to_string(v));
}

inline std::size_t end_of(const Paths& ps, VertexId v) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].back() == v) return i;
    throw ConstructionError("no path ends at " + std::to_string(v));
}

inline Paths without_indices(const Paths& ps, std::vector<std::size_t> drop) {
    std::sort(drop.begin(), drop.end());
    Paths out;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!std::binary_search(drop.begin(), drop.end(), i)) out.push_back(ps[i]);
    return out;
}

inline Paths relabel_paths(const Paths& ps, const std::vector<VertexId>& map) {
    Paths out;
    for (const auto& p : ps) {
        std::vector<VertexId> vs;
        for (VertexId v : p.vertices()) vs.push_back(map.at(v));
        out.emplace_back(std::move(vs));
    }
    return out;
}

inline Paths concat(Paths a, const Paths& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void check_side(const CoverSide& s, const char* what) {
    if (s.cover) {
        require_valid(s.graph, *s.cover, what);
    } else if (!is_known_exception(s.graph)) {
        throw DomainError(std::string(what) + " has no cover and is neither K3 nor K5");
    }
}

/// Vertex amalgam of two covered pieces: P_{1v} . P_2^v becomes one path.
inline Paths glue_covered(const Paths& p1, const Paths& p2, VertexId v) {
    const std::size_t i1 = end_of(p1, v);
    const std::size_t i2 = begin_of(p2, v);
    Paths out = concat(without_indices(p1, {i1}), without_indices(p2, {i2}));
    out.push_back(join(p1[i1], p2[i2]));
    return out;
}

/// Triangle {v, u, w} glued at v onto covered paths p2.
inline Paths glue_k3(const Paths& p2, VertexId v, VertexId u, VertexId w) {
    const std::size_t in = end_of(p2, v);
    const std::size_t out_i = begin_of(p2, v);
    Paths out = without_indices(p2, {in, out_i});
    out.push_back(join(p2[in], DiPath{v, w, u}));
    out.push_back(DiPath{u, v});
    out.push_back(DiPath{v, u, w});
    out.push_back(join(DiPath{w, v}, p2[out_i]));
    return out;
}

/// The K5-minus-edge fixture placed on {u, v, w, x, y} (fixture letters).
inline Paths k5_minus_edge_on(const std::array<VertexId, 5>& uvwxy) {
    const Fixture f = paper_fixture(FixtureName::k5_minus_edge);
    return relabel_paths(f.cover.paths(), std::vector<VertexId>(uvwxy.begin(), uvwxy.end()));
}

/// K5 on {v} + others glued at v onto covered paths p2.
inline Paths glue_k5(const Paths& p2, VertexId v, const std::array<VertexId, 4>& others) {
    const VertexId u = others[0];
    const Paths k5 = k5_minus_edge_on({u, v, others[1], others[2], others[3]});
    const std::size_t pu = begin_of(k5, u);
    const std::size_t in = end_of(p2, v);
    const std::size_t out_i = begin_of(p2, v);
    Paths out = concat(without_indices(p2, {in, out_i}), without_indices(k5, {pu}));
    out.push_back(join(join(p2[in], DiPath{v, u}), k5[pu]));
    out.push_back(join(DiPath{u, v}, p2[out_i]));
    return out;
}

inline std::vector<VertexId> others_of(const Graph& g, VertexId v) {
    std::vector<VertexId> out;
    for (VertexId x = 0; x < g.order(); ++x)
        if (x != v) out.push_back(x);
    return out;
}

}  // namespace detail

/// Cover of the graph obtained by identifying vertex va of `a` with vertex
/// vb of `b`. Vertices of b other than vb get ids a.order(), a.order()+1, ...
/// in increasing order.
inline Composite glue_at_vertex(const CoverSide& a, VertexId va, const CoverSide& b, VertexId vb) {
    using namespace detail;
    if (!a.graph.contains(va) || !b.graph.contains(vb)) throw InputError("glue_at_vertex: vertex outside graph");
    check_side(a, "glue_at_vertex: first piece");
    check_side(b, "glue_at_vertex: second piece");

    Composite out;
    out.first_map.resize(a.graph.order());
    for (VertexId x = 0; x < a.graph.order(); ++x) out.first_map[x] = x;
    out.second_map.resize(b.graph.order());
    VertexId next = static_cast<VertexId>(a.graph.order());
    for (VertexId x = 0; x < b.graph.order(); ++x) out.second_map[x] = x == vb ? va : next++;

    std::vector<Edge> edges = a.graph.edges();
    for (const Edge& e : b.graph.edges()) edges.emplace_back(out.second_map[e.u], out.second_map[e.v]);
    out.graph = Graph(next, edges);

    const VertexId v = va;
    auto mapped = [&](const std::vector<VertexId>& ids, const std::vector<VertexId>& map) {
        std::vector<VertexId> r;
        for (VertexId x : ids) r.push_back(map[x]);
        return r;
    };
    const auto a_others = mapped(others_of(a.graph, va), out.first_map);
    const auto b_others = mapped(others_of(b.graph, vb), out.second_map);

    Paths paths;
    if (a.cover && b.cover) {
        paths = glue_covered(a.cover->paths(), relabel_paths(b.cover->paths(), out.second_map), v);
    } else if (a.cover || b.cover) {
        const bool a_covered = a.cover.has_value();
        const CoverSide& host = a_covered ? a : b;
        const Paths host_paths = a_covered ? host.cover->paths() : relabel_paths(host.cover->paths(), out.second_map);
        const auto& ex_others = a_covered ? b_others : a_others;
        if (host.graph.order() == 1)
            throw NonExistenceError("glue_at_vertex: nothing to glue the K" + std::to_string(ex_others.size() + 1) +
                                    " to");
        if (ex_others.size() == 2)
            paths = glue_k3(host_paths, v, ex_others[0], ex_others[1]);
        else
            paths = glue_k5(host_paths, v, {ex_others[0], ex_others[1], ex_others[2], ex_others[3]});
    } else {
        const bool a_k5 = a.graph.order() == 5, b_k5 = b.graph.order() == 5;
        std::vector<VertexId> map;
        if (!a_k5 && !b_k5) {
            // u v | w | x y
            map = {a_others[0], a_others[1], v, b_others[0], b_others[1]};
            paths = relabel_paths(paper_fixture(FixtureName::k3k3_cut_vertex).cover.paths(), map);
        } else if (a_k5 != b_k5) {
            const auto& k5 = a_k5 ? a_others : b_others;
            const auto& k3 = a_k5 ? b_others : a_others;
            // s t u v w x y
            map = {k3[0], k3[1], k5[0], v, k5[1], k5[2], k5[3]};
            paths = relabel_paths(paper_fixture(FixtureName::k5k3_cut_vertex).cover.paths(), map);
        } else {
            // u v w x y u' w' x' y'
            map = {a_others[0], v, a_others[1], a_others[2], a_others[3],
                   b_others[0], b_others[1], b_others[2], b_others[3]};
            paths = relabel_paths(paper_fixture(FixtureName::k5k5_cut_vertex).cover.paths(), map);
        }
    }
    out.cover = certified(out.graph, PathCover(std::move(paths)), "glue_at_vertex");
    return out;
}

namespace detail {

/// Two covered pieces joined by bridges u-v and w-x.
inline Paths bridge_covered(const Paths& p1, const Paths& p2, VertexId u, VertexId v, VertexId w, VertexId x) {
    const std::size_t iu = end_of(p1, u), iw = end_of(p1, w);
    const std::size_t iv = begin_of(p2, v), ix = begin_of(p2, x);
    Paths out = concat(without_indices(p1, {iu, iw}), without_indices(p2, {iv, ix}));
    out.push_back(join(join(p1[iu], DiPath{u, v}), p2[iv]));
    out.push_back(DiPath{v, u});
    out.push_back(join(join(p1[iw], DiPath{w, x}), p2[ix]));
    out.push_back(DiPath{x, w});
    return out;
}

/// K5 on {u, v, w, x, y} (fixture letters) joined to covered paths p2 by
/// bridges u-u2 and v-v2.
inline Paths bridge_k5(const Paths& p2, const std::array<VertexId, 5>& uvwxy, VertexId u2, VertexId v2) {
    const VertexId u = uvwxy[0], v = uvwxy[1];
    const Paths k5 = k5_minus_edge_on(uvwxy);
    const std::size_t pu = begin_of(k5, u), pv = end_of(k5, v);
    const std::size_t iu2 = end_of(p2, u2), iv2 = end_of(p2, v2);
    Paths out = concat(without_indices(k5, {pu, pv}), without_indices(p2, {iu2, iv2}));
    out.push_back(join(p2[iu2], DiPath{u2, u, v}));
    out.push_back(DiPath{u, u2});
    out.push_back(join(k5[pv], DiPath{v, v2}));
    out.push_back(join(join(p2[iv2], DiPath{v2, v, u}), k5[pu]));
    return out;
}

}  // namespace detail

/// Cover of a and b joined by the bridge edges u-v and w-x, where u, w are
/// vertices of a and v, x vertices of b. Vertices of b are shifted by
/// a.order(). A K5 piece is allowed, a K3 piece is not.
inline Composite bridge2_compose(const CoverSide& a, VertexId u, VertexId w, const CoverSide& b, VertexId v,
                                 VertexId x) {
    using namespace detail;
    if (!a.graph.contains(u) || !a.graph.contains(w) || !b.graph.contains(v) || !b.graph.contains(x))
        throw InputError("bridge2_compose: bridge endpoint outside its piece");
    if (u == w || v == x) throw DomainError("bridge2_compose: the two bridges share a vertex");
    check_side(a, "bridge2_compose: first piece");
    check_side(b, "bridge2_compose: second piece");
    for (const CoverSide* s : {&a, &b})
        if (!s->cover && s->graph.order() == 3) throw DomainError("bridge2_compose: a K3 piece is not supported");

    Composite out;
    const auto shift = static_cast<VertexId>(a.graph.order());
    for (VertexId i = 0; i < a.graph.order(); ++i) out.first_map.push_back(i);
    for (VertexId i = 0; i < b.graph.order(); ++i) out.second_map.push_back(i + shift);
    std::vector<Edge> edges = a.graph.edges();
    for (const Edge& e : b.graph.edges()) edges.emplace_back(e.u + shift, e.v + shift);
    edges.emplace_back(u, v + shift);
    edges.emplace_back(w, x + shift);
    out.graph = Graph(a.graph.order() + b.graph.order(), edges);

    const VertexId bv = v + shift, bx = x + shift;
    auto rest = [](const Graph& g, VertexId p, VertexId q, VertexId off) {
        std::vector<VertexId> r;
        for (VertexId i = 0; i < g.order(); ++i)
            if (i != p && i != q) r.push_back(i + off);
        return r;
    };

    Paths paths;
    if (a.cover && b.cover) {
        paths = bridge_covered(a.cover->paths(), relabel_paths(b.cover->paths(), out.second_map), u, bv, w, bx);
    } else if (!a.cover && b.cover) {
        const auto r = rest(a.graph, u, w, 0);
        paths = bridge_k5(relabel_paths(b.cover->paths(), out.second_map), {u, w, r[0], r[1], r[2]}, bv, bx);
    } else if (a.cover && !b.cover) {
        const auto r = rest(b.graph, v, x, shift);
        paths = bridge_k5(a.cover->paths(), {bv, bx, r[0], r[1], r[2]}, u, w);
    } else {
        const auto ra = rest(a.graph, u, w, 0);
        const auto rb = rest(b.graph, v, x, shift);
        // u v w x y u' v' w' x' y'
        const std::vector<VertexId> map = {u, w, ra[0], ra[1], ra[2], bv, bx, rb[0], rb[1], rb[2]};
        paths = relabel_paths(paper_fixture(FixtureName::k5k5_two_bridge).cover.paths(), map);
    }
    out.cover = certified(out.graph, PathCover(std::move(paths)), "bridge2_compose");
    return out;
}

}  // namespace oppdc
