#pragma once

// Growing a covered graph one piece at a time: a vertex of degree 1 or 2,
// an edge subdivision, an ear, a cycle. Each step rebuilds the cover by a
// local surgery; a low-degree vertex whose surgery is blocked falls back to
// constrained completion.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/construct/basic.hpp"
#include "oppdc/construct/compose.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/decompose.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/solve/search.hpp"

namespace oppdc {

/// Graph grown by one vertex (numbered `added`) with its cover.
struct Extension {
    Graph graph;
    PathCover cover;
    VertexId added = 0;
};

struct EarExtension {
    Graph graph;
    PathCover cover;
    /// x, the new ear vertices in order, y.
    std::vector<VertexId> ear;
};

/// How a cover was repaired after a local change.
enum class Route { pattern, local_completion, global_fallback };

inline const char* to_string(Route r) {
    switch (r) {
        case Route::pattern: return "pattern";
        case Route::local_completion: return "local-completion";
        case Route::global_fallback: return "global-fallback";
    }
    return "?";
}

struct Repair {
    SolveOutcome outcome;
    Route route = Route::pattern;
};

namespace detail {

/// Completes `partial` (paths of host, some missing) into a cover of host.
/// Tries, in order: keep every path with no endpoint in `focus`; keep every
/// path avoiding `focus`; keep nothing. A level that keeps no path is
/// skipped, except the last. Stops at the first cover or budget trip.
inline Repair complete_around(const Graph& host, const Paths& partial, std::span<const VertexId> focus,
                              BudgetMeter& meter) {
    auto in_focus = [&](VertexId v) { return std::find(focus.begin(), focus.end(), v) != focus.end(); };
    Paths level1, level2;
    for (const auto& p : partial) {
        if (!in_focus(p.front()) && !in_focus(p.back())) level1.push_back(p);
        if (std::none_of(p.vertices().begin(), p.vertices().end(), in_focus)) level2.push_back(p);
    }
    std::size_t last_size = 0;
    bool tried_any = false;
    for (const Paths* fixed : {&level1, &level2}) {
        if (fixed->empty() || (tried_any && fixed->size() == last_size)) continue;
        tried_any = true;
        last_size = fixed->size();
        SolveOutcome o = complete_cover(host, *fixed, meter);
        if (o.status != SolveStatus::unsat) return {std::move(o), Route::local_completion};
    }
    return {complete_cover(host, {}, meter), Route::global_fallback};
}

inline Graph add_vertex_graph(const Graph& g, std::span<const VertexId> neighbors) {
    const auto v = static_cast<VertexId>(g.order());
    std::vector<Edge> extra;
    for (VertexId u : neighbors) extra.emplace_back(u, v);
    return with_edges(g, extra, g.order() + 1);
}

/// The direct degree-2 surgery for new vertex v adjacent to u, w:
/// P_u . uv,  vw . P^w,  and the new path w v u. Needs P_u != P^w.
inline std::optional<Paths> degree2_pattern(const Paths& ps, VertexId v, VertexId u, VertexId w) {
    const std::size_t iu = end_of(ps, u), iw = begin_of(ps, w);
    if (iu == iw) return std::nullopt;
    Paths out = without_indices(ps, {iu, iw});
    out.push_back(join(ps[iu], DiPath{u, v}));
    out.push_back(join(DiPath{v, w}, ps[iw]));
    out.push_back(DiPath{w, v, u});
    return out;
}

/// New vertex v (already present in host) attached to one or two
/// neighbours of a covered graph.
inline Repair add_low_degree(const Graph& host, const Paths& ps, VertexId v, std::span<const VertexId> nb,
                             BudgetMeter& meter) {
    const auto t0 = std::chrono::steady_clock::now();
    auto done = [&](Paths out) {
        Repair r;
        r.outcome.status = SolveStatus::cover;
        r.outcome.cover = PathCover(std::move(out));
        certify(host, *r.outcome.cover);
        r.outcome.elapsed = std::chrono::steady_clock::now() - t0;
        return r;
    };
    if (nb.size() == 1) {
        const VertexId u = nb[0];
        const std::size_t iu = end_of(ps, u);
        Paths out = without_indices(ps, {iu});
        out.push_back(join(ps[iu], DiPath{u, v}));
        out.push_back(DiPath{v, u});
        return done(std::move(out));
    }
    if (auto p = degree2_pattern(ps, v, nb[0], nb[1])) return done(std::move(*p));
    if (auto p = degree2_pattern(ps, v, nb[1], nb[0])) return done(std::move(*p));
    const std::vector<VertexId> focus = {nb[0], nb[1], v};
    return complete_around(host, ps, focus, meter);
}

inline void check_cover_input(const Graph& g, const PathCover& c, const char* what) {
    require_valid(g, c, what);
}

/// Reroutes x->y and y->x through v and splits the x->y path at v.
inline Paths subdivide_paths(const Paths& ps, VertexId x, VertexId y, VertexId v) {
    Paths out;
    for (const auto& p : ps) {
        const auto& vs = p.vertices();
        std::size_t at = vs.size();
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if ((vs[i] == x && vs[i + 1] == y) || (vs[i] == y && vs[i + 1] == x)) at = i;
        if (at == vs.size()) {
            out.push_back(p);
            continue;
        }
        std::vector<VertexId> head(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(at) + 1);
        std::vector<VertexId> tail(vs.begin() + static_cast<std::ptrdiff_t>(at) + 1, vs.end());
        head.push_back(v);
        if (vs[at] == x) {
            tail.insert(tail.begin(), v);
            out.emplace_back(std::move(head));
            out.emplace_back(std::move(tail));
        } else {
            head.insert(head.end(), tail.begin(), tail.end());
            out.emplace_back(std::move(head));
        }
    }
    return out;
}

inline Graph subdivided_graph(const Graph& g, VertexId x, VertexId y) {
    const auto v = static_cast<VertexId>(g.order());
    const Edge e(x, y);
    Graph h = without_edges(g, std::span<const Edge>(&e, 1));
    const std::vector<Edge> extra = {Edge(x, v), Edge(v, y)};
    return with_edges(h, extra, g.order() + 1);
}

}  // namespace detail

/// Adds vertex g.order() adjacent to the one or two given vertices.
inline Extension add_vertex_low_degree(const Graph& g, const PathCover& c, std::span<const VertexId> neighbors,
                                       Budget budget = {}) {
    detail::check_cover_input(g, c, "add_vertex_low_degree: cover");
    if (neighbors.empty() || neighbors.size() > 2) throw DomainError("add_vertex_low_degree: need 1 or 2 neighbours");
    for (VertexId u : neighbors)
        if (!g.contains(u)) throw InputError("add_vertex_low_degree: neighbour outside graph");
    if (neighbors.size() == 2 && neighbors[0] == neighbors[1])
        throw InputError("add_vertex_low_degree: neighbours must be distinct");

    Extension out;
    out.added = static_cast<VertexId>(g.order());
    out.graph = detail::add_vertex_graph(g, neighbors);
    BudgetMeter meter(budget);
    Repair r = detail::add_low_degree(out.graph, c.paths(), out.added, neighbors, meter);
    switch (r.outcome.status) {
        case SolveStatus::cover: break;
        case SolveStatus::unsat:
            throw NonExistenceError("add_vertex_low_degree: the grown graph has no cover");
        case SolveStatus::budget_exhausted:
            throw ConstructionError("add_vertex_low_degree: completion search ran out of budget");
    }
    out.cover = std::move(*r.outcome.cover);
    return out;
}

inline Extension add_vertex_low_degree(const Graph& g, const PathCover& c, std::initializer_list<VertexId> neighbors,
                                       Budget budget = {}) {
    const std::vector<VertexId> nb(neighbors);
    return add_vertex_low_degree(g, c, std::span<const VertexId>(nb), budget);
}

/// Replaces edge xy by the path x v y, v = g.order().
inline Extension subdivide_edge(const Graph& g, const PathCover& c, VertexId x, VertexId y) {
    if (!g.has_edge(x, y)) throw InputError("subdivide_edge: " + to_string(Edge(x, y)) + " is not an edge");
    detail::check_cover_input(g, c, "subdivide_edge: cover");
    Extension out;
    out.added = static_cast<VertexId>(g.order());
    out.graph = detail::subdivided_graph(g, x, y);
    out.cover = detail::certified(out.graph, PathCover(detail::subdivide_paths(c.paths(), x, y, out.added)),
                                  "subdivide_edge");
    return out;
}

/// Adds an ear of `length` edges from x to y: a degree-2 vertex on {x, y},
/// then length-2 subdivisions alternating between the x-side and y-side
/// end of the ear, x-side first.
inline EarExtension attach_ear(const Graph& g, const PathCover& c, VertexId x, VertexId y, std::size_t length,
                               Budget budget = {}) {
    if (length < 2) throw DomainError("attach_ear: ears must have length at least 2");
    if (x == y) throw DomainError("attach_ear: ear endpoints must differ");
    Extension step = add_vertex_low_degree(g, c, {x, y}, budget);
    EarExtension out{std::move(step.graph), std::move(step.cover), {x, step.added, y}};
    for (std::size_t k = 0; k + 2 < length; ++k) {
        const bool x_side = k % 2 == 0;
        const std::size_t at = x_side ? 0 : out.ear.size() - 2;
        Extension s = subdivide_edge(out.graph, out.cover, out.ear[at], out.ear[at + 1]);
        out.ear.insert(out.ear.begin() + static_cast<std::ptrdiff_t>(at) + 1, s.added);
        out.graph = std::move(s.graph);
        out.cover = std::move(s.cover);
    }
    return out;
}

namespace detail {

/// Working state for building a cover of g piece by piece in compact ids.
struct Builder {
    Graph graph;
    PathCover cover;
    std::vector<VertexId> to_target;    // working id -> id in g
    std::vector<std::int64_t> to_work;  // id in g -> working id or -1

    Builder(std::size_t target_order, const std::vector<VertexId>& cycle)
        : graph(cycle_graph(cycle.size())), cover(PathCover(cycle_paths(iota(cycle.size())))),
          to_work(target_order, -1) {
        for (VertexId i = 0; i < cycle.size(); ++i) adopt(cycle[i], i);
    }

    static std::vector<VertexId> iota(std::size_t n) {
        std::vector<VertexId> v(n);
        for (VertexId i = 0; i < n; ++i) v[i] = i;
        return v;
    }

    void adopt(VertexId target, VertexId work) {
        if (to_target.size() <= work) to_target.resize(work + 1);
        to_target[work] = target;
        to_work[target] = work;
    }

    bool has(VertexId target) const { return to_work[target] >= 0; }
    VertexId work(VertexId target) const { return static_cast<VertexId>(to_work[target]); }

    PathCover finish(const Graph& g, const char* what) const {
        if (to_target.size() != g.order())
            throw DomainError(std::string(what) + ": decomposition does not reach every vertex");
        return certified(g, cover.relabeled(to_target), what);
    }
};

}  // namespace detail

/// Cover of g from an ear decomposition with base cycle of length >= 4 and
/// ears of length >= 2.
inline PathCover ear_cover(const Graph& g, const EarDecomposition& d, Budget budget = {}) {
    if (d.base_cycle.size() == 3) throw NonExistenceError("ear_cover: base cycle is K3");
    if (!is_valid_ear_decomposition(g, d, true))
        throw DomainError("ear_cover: not an ear decomposition of the graph with base >= 4 and ears of length >= 2");
    detail::Builder b(g.order(), d.base_cycle);
    for (const auto& ear : d.ears) {
        EarExtension e = attach_ear(b.graph, b.cover, b.work(ear.front()), b.work(ear.back()), ear.size() - 1, budget);
        for (std::size_t i = 1; i + 1 < ear.size(); ++i) b.adopt(ear[i], e.ear[i]);
        b.graph = std::move(e.graph);
        b.cover = std::move(e.cover);
    }
    return b.finish(g, "ear_cover");
}

namespace detail {

inline Paths split_at(const DiPath& p, const std::vector<char>& cut) {
    Paths out;
    std::vector<VertexId> cur;
    const auto& vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        cur.push_back(vs[i]);
        if (i > 0 && i + 1 < vs.size() && cut[vs[i]]) {
            out.emplace_back(cur);
            cur.assign(1, vs[i]);
        }
    }
    out.emplace_back(std::move(cur));
    return out;
}

/// Attaches cycle `cyc` (ids of host) to the covered subgraph whose vertices
/// are flagged in `old`. Returns the first candidate that verifies.
inline Paths attach_cycle_paths(const Graph& host, const Paths& ps, const std::vector<char>& old,
                                const std::vector<VertexId>& cyc) {
    const std::size_t k = cyc.size();
    std::vector<std::size_t> shared, fresh;
    for (std::size_t p = 0; p < k; ++p) (old[cyc[p]] ? shared : fresh).push_back(p);

    if (k == 3) return glue_k3(ps, cyc[shared.at(0)], cyc[fresh[0]], cyc[fresh[1]]);
    if (shared.size() == 1) {
        std::vector<VertexId> seq(cyc.begin() + static_cast<std::ptrdiff_t>(shared[0]), cyc.end());
        seq.insert(seq.end(), cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(shared[0]));
        return glue_covered(ps, cycle_paths(seq), cyc[shared[0]]);
    }

    auto valid = [&](const Paths& cand) { return verify_oppdc(host, PathCover(cand), true).valid; };
    const auto sk = static_cast<std::ptrdiff_t>(k);
    auto at = [&](std::ptrdiff_t p) { return cyc[static_cast<std::size_t>((p % sk + sk) % sk)]; };
    auto walk = [&](std::size_t from, std::size_t to, int step) {
        std::vector<VertexId> vs;
        auto p = static_cast<std::ptrdiff_t>(from);
        vs.push_back(at(p));
        while (at(p) != cyc[to]) {
            p += step;
            vs.push_back(at(p));
        }
        return DiPath(std::move(vs));
    };
    auto offset = [&](std::size_t from, std::size_t to, int step) {
        return step > 0 ? (to + k - from) % k : (from + k - to) % k;
    };

    for (std::size_t i : fresh)
        for (std::size_t j : fresh)
            for (std::size_t r : shared)
                for (std::size_t s : shared)
                    for (int d : {1, -1}) {
                        if (i == j || r == s) continue;
                        const std::size_t oj = offset(i, j, d), or_ = offset(i, r, d), os = offset(i, s, d);
                        if (!(oj < or_ && or_ < os)) continue;
                        const VertexId vj = cyc[j], vr = cyc[r], vs = cyc[s];
                        const std::size_t pr = begin_of(ps, vr), pss = begin_of(ps, vs);
                        Paths cand = without_indices(ps, {pr, pss});
                        std::vector<char> cut(host.order(), 0);
                        for (std::size_t p : fresh)
                            if (cyc[p] != vj) cut[cyc[p]] = 1;
                        for (auto& piece : split_at(join(walk(i, s, -d), ps[pss]), cut)) cand.push_back(piece);
                        for (auto& piece : split_at(walk(s, i, -d), cut)) cand.push_back(piece);
                        cand.push_back(join(walk(j, r, d), ps[pr]));
                        cand.push_back(walk(r, j, d));
                        if (valid(cand)) return cand;
                    }

    if (k == 4 && shared.size() == 2 && shared[1] - shared[0] == 2) {
        for (std::size_t first : shared)
            for (int d : {1, -1}) {
                const VertexId v1 = at(static_cast<std::ptrdiff_t>(first)),
                               v2 = at(static_cast<std::ptrdiff_t>(first) + d),
                               v3 = at(static_cast<std::ptrdiff_t>(first) + 2 * d),
                               v4 = at(static_cast<std::ptrdiff_t>(first) + 3 * d);
                const std::size_t p1 = begin_of(ps, v1), p3 = end_of(ps, v3);
                Paths cand = without_indices(ps, {p1, p3});
                cand.push_back(DiPath{v1, v4, v3, v2});
                cand.push_back(join(DiPath{v2, v1}, ps[p1]));
                cand.push_back(DiPath{v4, v1, v2, v3});
                cand.push_back(join(ps[p3], DiPath{v3, v4}));
                if (valid(cand)) return cand;
            }
    }
    throw CaseNotCovered("attach_cycle: intersection pattern is not handled by any case");
}

}  // namespace detail

/// Adds cycle `cyc` to a covered graph. Vertices of cyc with id >=
/// gp.order() are new and must be numbered gp.order(), gp.order()+1, ...
/// A triangle is accepted when it meets the graph in one vertex.
inline Extension attach_cycle(const Graph& gp, const PathCover& cp, const std::vector<VertexId>& cyc) {
    detail::check_cover_input(gp, cp, "attach_cycle: cover");
    if (cyc.size() < 3) throw DomainError("attach_cycle: cycle must have length at least 3");
    if (detail::has_repeat(cyc)) throw InputError("attach_cycle: cycle repeats a vertex");
    std::size_t fresh = 0;
    VertexId top = 0;
    for (VertexId v : cyc) {
        if (v >= gp.order()) ++fresh;
        top = std::max(top, v);
    }
    if (fresh < 2) throw DomainError("attach_cycle: cycle must bring at least two new vertices");
    if (fresh == cyc.size()) throw DomainError("attach_cycle: cycle does not meet the graph");
    if (top + 1 != gp.order() + fresh) throw InputError("attach_cycle: new vertices must be numbered consecutively");

    std::vector<Edge> extra;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Edge e(cyc[i], cyc[(i + 1) % cyc.size()]);
        if (e.v < gp.order() && gp.has_edge(e.u, e.v))
            throw DomainError("attach_cycle: cycle reuses edge " + to_string(e));
        extra.push_back(e);
    }
    Extension out;
    out.graph = with_edges(gp, extra, gp.order() + fresh);
    out.added = static_cast<VertexId>(gp.order());
    std::vector<char> old(out.graph.order(), 0);
    for (VertexId v = 0; v < gp.order(); ++v) old[v] = 1;
    out.cover = detail::certified(out.graph, PathCover(detail::attach_cycle_paths(out.graph, cp.paths(), old, cyc)),
                                  "attach_cycle");
    return out;
}

/// Cover of g from an ordered cycle partition: the first cycle (length >= 4)
/// gets its own cover, every later one is attached.
inline PathCover cycle_partition_cover(const Graph& g, const CycleDecomposition& d) {
    if (!d.cycles.empty() && d.cycles.front().size() == 3)
        throw NonExistenceError("cycle_partition_cover: the first cycle is K3");
    if (!is_valid_cycle_decomposition(g, d, true))
        throw DomainError("cycle_partition_cover: not a valid attached cycle partition of the graph");
    detail::Builder b(g.order(), d.cycles.front());
    for (std::size_t i = 1; i < d.cycles.size(); ++i) {
        std::vector<VertexId> cyc;
        auto next = static_cast<VertexId>(b.graph.order());
        for (VertexId v : d.cycles[i]) {
            if (!b.has(v)) b.adopt(v, next++);
            cyc.push_back(b.work(v));
        }
        Extension e = attach_cycle(b.graph, b.cover, cyc);
        b.graph = std::move(e.graph);
        b.cover = std::move(e.cover);
    }
    return b.finish(g, "cycle_partition_cover");
}

}  // namespace oppdc
