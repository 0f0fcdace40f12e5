#pragma once

// Reinserting a degree-3 vertex v into a cover of a reduced graph.
//
// Triangle mode: N(v) = {a, b, c} spans a triangle and the reduced graph
// is G - v. Added-edge mode: x, z in N(v) are not adjacent and the reduced
// graph is G - v + xz.
//
// The six arcs at v form two passes through v plus one arc leaving v (the
// path starting there) and one arc entering v (the path ending there). The
// lift tries fixed splice patterns first (on the reduced cover and on its
// reversal, which is also a cover), then constrained completion around
// N(v), then a search on the whole graph.

#include <algorithm>
#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/construct/compose.hpp"
#include "oppdc/construct/grow.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/solve/search.hpp"

namespace oppdc {

struct TriangleLift {};
struct AddedEdgeLift {
    VertexId x = 0;
    VertexId z = 0;
};
/// Vertex ids are those of the full graph.
using LiftMode = std::variant<TriangleLift, AddedEdgeLift>;

struct Degree3Reduction {
    Graph graph;
    /// reduced id -> id in the full graph
    std::vector<VertexId> to_full;
};

/// The reduced graph for a lift, numbered like without_vertex(g, v).
inline Degree3Reduction degree3_reduction(const Graph& g, VertexId v, const LiftMode& mode) {
    if (!g.contains(v)) throw InputError("degree3_reduction: vertex outside graph");
    if (g.degree(v) != 3) throw DomainError("degree3_reduction: vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(g.degree(v)));
    const auto& nb = g.neighbors(v);
    Subgraph sub = without_vertex(g, v);
    Degree3Reduction out{std::move(sub.graph), std::move(sub.to_parent)};
    if (std::holds_alternative<TriangleLift>(mode)) {
        if (!g.has_edge(nb[0], nb[1]) || !g.has_edge(nb[0], nb[2]) || !g.has_edge(nb[1], nb[2]))
            throw DomainError("degree3_reduction: neighbourhood is not a triangle");
    } else {
        const auto [x, z] = std::get<AddedEdgeLift>(mode);
        if (x == z || !g.has_edge(v, x) || !g.has_edge(v, z))
            throw DomainError("degree3_reduction: x and z must be two neighbours of v");
        if (g.has_edge(x, z)) throw DomainError("degree3_reduction: xz is already an edge");
        out.graph = with_edge(out.graph, Edge(*sub.to_child[x], *sub.to_child[z]));
    }
    return out;
}

namespace detail {

inline std::optional<std::size_t> path_with_arc(const Paths& ps, VertexId a, VertexId b) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto& vs = ps[i].vertices();
        for (std::size_t k = 0; k + 1 < vs.size(); ++k)
            if (vs[k] == a && vs[k + 1] == b) return i;
    }
    return std::nullopt;
}

/// Replaces arc a->b by a->v->b in path i.
inline void detour(Paths& ps, std::size_t i, VertexId a, VertexId b, VertexId v) {
    std::vector<VertexId> vs = ps[i].vertices();
    for (std::size_t k = 0; k + 1 < vs.size(); ++k)
        if (vs[k] == a && vs[k + 1] == b) {
            vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(k) + 1, v);
            break;
        }
    ps[i] = DiPath(std::move(vs));
}

/// Splits the path through y (not containing v) into pre.y->v and v->y.post.
inline std::vector<Paths> split_through(const Paths& ps, VertexId y, VertexId v) {
    std::vector<Paths> out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!ps[i].contains(y) || ps[i].contains(v)) continue;
        const auto& vs = ps[i].vertices();
        const auto at = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), y) - vs.begin());
        std::vector<VertexId> head(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(at) + 1);
        std::vector<VertexId> tail(vs.begin() + static_cast<std::ptrdiff_t>(at), vs.end());
        head.push_back(v);
        tail.insert(tail.begin(), v);
        Paths cand = without_indices(ps, {i});
        cand.emplace_back(std::move(head));
        cand.emplace_back(std::move(tail));
        out.push_back(std::move(cand));
    }
    return out;
}

inline std::vector<Paths> added_edge_patterns(const Paths& ps, VertexId v, VertexId x, VertexId y, VertexId z) {
    Paths base = ps;
    for (auto [a, b] : {std::pair{x, z}, std::pair{z, x}}) {
        auto i = path_with_arc(base, a, b);
        if (!i) return {};
        detour(base, *i, a, b, v);
    }
    return split_through(base, y, v);
}

/// Triangle splices, for every labelling (a, b, c) of N(v):
///  * split at a, detour both arcs between b and c through v, then cover
///    b->c again with the merge P_b . bc . P^c and c->b with a new path;
///  * extend P_a by a->v and prefix P^b with v->b, detour b->c and c->a
///    through v, and cover b->c, c->a again with the new path b c a.
inline std::vector<Paths> triangle_patterns(const Paths& ps, VertexId v, std::array<VertexId, 3> nb) {
    std::vector<Paths> out;
    auto detour_all = [&](Paths& cand, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
        for (auto [p, q] : arcs) {
            auto i = path_with_arc(cand, p, q);
            if (!i || cand[*i].contains(v)) return false;
            detour(cand, *i, p, q, v);
        }
        return true;
    };
    std::sort(nb.begin(), nb.end());
    do {
        const VertexId a = nb[0], b = nb[1], c = nb[2];
        for (Paths cand : split_through(ps, a, v)) {
            if (!detour_all(cand, {{b, c}, {c, b}})) continue;
            const std::size_t ib = end_of(cand, b), ic = begin_of(cand, c);
            if (ib == ic) continue;
            Paths merged = without_indices(cand, {ib, ic});
            merged.push_back(join(join(cand[ib], DiPath{b, c}), cand[ic]));
            merged.push_back(DiPath{c, b});
            out.push_back(std::move(merged));
        }
        const std::size_t ia = end_of(ps, a), ib = begin_of(ps, b);
        if (ia != ib) {
            Paths cand = without_indices(ps, {ia, ib});
            cand.push_back(join(ps[ia], DiPath{a, v}));
            cand.push_back(join(DiPath{v, b}, ps[ib]));
            if (detour_all(cand, {{b, c}, {c, a}})) {
                cand.push_back(DiPath{b, c, a});
                out.push_back(std::move(cand));
            }
        }
    } while (std::next_permutation(nb.begin(), nb.end()));
    return out;
}

inline Repair lift(const Graph& g, VertexId v, const Paths& reduced_full, const LiftMode& mode, BudgetMeter& meter) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& nb = g.neighbors(v);
    std::vector<Paths> candidates;
    Paths partial;
    Paths reversed;
    for (const auto& p : reduced_full) reversed.push_back(p.reversed());
    auto add = [&](std::vector<Paths> more) {
        for (auto& c : more) candidates.push_back(std::move(c));
    };
    if (std::holds_alternative<TriangleLift>(mode)) {
        add(triangle_patterns(reduced_full, v, {nb[0], nb[1], nb[2]}));
        add(triangle_patterns(reversed, v, {nb[0], nb[1], nb[2]}));
        partial = reduced_full;
    } else {
        const auto [x, z] = std::get<AddedEdgeLift>(mode);
        const VertexId y = nb[0] != x && nb[0] != z ? nb[0] : nb[1] != x && nb[1] != z ? nb[1] : nb[2];
        add(added_edge_patterns(reduced_full, v, x, y, z));
        add(added_edge_patterns(reversed, v, x, y, z));
        for (const auto& p : reduced_full)
            if (!path_with_arc({p}, x, z) && !path_with_arc({p}, z, x)) partial.push_back(p);
    }
    for (auto& cand : candidates) {
        PathCover c(std::move(cand));
        if (!verify_oppdc(g, c, true).valid) continue;
        Repair r;
        r.outcome.status = SolveStatus::cover;
        r.outcome.cover = ordered_by_start(c.paths());
        r.outcome.elapsed = std::chrono::steady_clock::now() - t0;
        return r;
    }
    std::vector<VertexId> focus(nb.begin(), nb.end());
    focus.push_back(v);
    return complete_around(g, partial, focus, meter);
}

}  // namespace detail

/// Lifts `reduced_cover` (a cover of degree3_reduction(g, v, mode).graph)
/// to a cover of g. The route records whether a splice pattern, a local
/// completion or a search on all of g produced the cover.
inline Repair lift_degree3(const Graph& g, VertexId v, const PathCover& reduced_cover, const LiftMode& mode,
                           BudgetMeter& meter) {
    const Degree3Reduction red = degree3_reduction(g, v, mode);
    detail::require_valid(red.graph, reduced_cover, "lift_degree3: reduced cover");
    if (g.order() > search_max_order) throw DomainError("lift_degree3: graph too large for completion search");
    const auto start = meter.nodes();
    Repair r = detail::lift(g, v, detail::relabel_paths(reduced_cover.paths(), red.to_full), mode, meter);
    r.outcome.nodes_explored = meter.nodes() - start;
    return r;
}

inline Repair lift_degree3(const Graph& g, VertexId v, const PathCover& reduced_cover, const LiftMode& mode,
                           Budget budget = {}) {
    BudgetMeter meter(budget);
    return lift_degree3(g, v, reduced_cover, mode, meter);
}

}  // namespace oppdc
