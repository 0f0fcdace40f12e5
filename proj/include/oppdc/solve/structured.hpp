#pragma once

// Structure-first solver. A connected graph is broken down by the first
// rule that applies:
//   1. cut vertices: solve the blocks, glue along the block-cut tree;
//   2. a 2-edge cut with disjoint edges: solve both sides, bridge them;
//   3. a vertex of degree <= 2: smooth or delete it, solve, put it back;
//   4. on 8 or more vertices, a search capped at a few thousand nodes;
//   5. a vertex of degree 3: reduce, solve, lift;
//   6. known families: complete, complete bipartite, cycle;
//   7. exhaustive search.
// A rule whose subproblem has no cover hands over to the next rule, so
// unsat only ever comes from a full search.

#include <chrono>
#include <optional>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/construct/basic.hpp"
#include "oppdc/construct/block_graph.hpp"
#include "oppdc/construct/compose.hpp"
#include "oppdc/construct/grow.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/structure.hpp"
#include "oppdc/solve/complete_graph.hpp"
#include "oppdc/solve/lift.hpp"
#include "oppdc/solve/search.hpp"

namespace oppdc {

/// How often each rule fired during one solve_structured call.
struct StructuredTrace {
    std::size_t block_folds = 0;
    std::size_t bridge_folds = 0;
    std::size_t smoothings = 0;
    std::size_t deletions = 0;
    std::size_t lift_patterns = 0;
    std::size_t lift_local = 0;
    std::size_t lift_global = 0;
    std::size_t families = 0;
    std::size_t probes = 0;
    std::size_t fallbacks = 0;
};

namespace detail {

class StructuredSolver {
public:
    StructuredSolver(BudgetMeter& meter, StructuredTrace& trace) : meter_(meter), trace_(trace) {}

    SolveOutcome solve(const Graph& g) {
        const auto comps = connected_components(g);
        if (comps.size() <= 1) return connected(g);
        std::vector<DiPath> out;
        for (const auto& comp : comps) {
            const Subgraph sub = induced_subgraph(g, comp);
            SolveOutcome o = connected(sub.graph);
            if (o.status != SolveStatus::cover) return o;
            const PathCover mapped = o.cover->relabeled(sub.to_parent);
            out.insert(out.end(), mapped.paths().begin(), mapped.paths().end());
        }
        return found(g, PathCover(std::move(out)));
    }

private:
    using Step = std::optional<SolveOutcome>;

    SolveOutcome found(const Graph& g, PathCover c) {
        SolveOutcome o;
        o.status = SolveStatus::cover;
        c = ordered_by_start(c.paths());
        certify(g, c);
        o.cover = std::move(c);
        return o;
    }

    static SolveOutcome exhausted() { return SolveOutcome{}; }

    SolveOutcome connected(const Graph& g) {
        if (meter_.exhausted()) return exhausted();
        if (g.order() == 1) return found(g, PathCover{DiPath{0}});
        if (g.order() == 2) return found(g, PathCover{DiPath{0, 1}, DiPath{1, 0}});
        if (!is_known_exception(g)) {
            for (Step (StructuredSolver::*rule)(const Graph&) :
                 {&StructuredSolver::by_blocks, &StructuredSolver::by_two_edge_cut, &StructuredSolver::by_low_degree,
                  &StructuredSolver::by_probe, &StructuredSolver::by_degree3, &StructuredSolver::by_family}) {
                if (Step s = (this->*rule)(g)) return std::move(*s);
            }
        }
        ++trace_.fallbacks;
        return complete_cover(g, {}, meter_);
    }

    /// Cover of a piece, or a bare K3/K5 side. nullopt with `stop` set
    /// means the budget ran out; nullopt alone means no cover.
    std::optional<CoverSide> side(const Graph& piece, bool& stop) {
        if (is_known_exception(piece)) return CoverSide::exceptional(piece);
        SolveOutcome o = connected(piece);
        if (o.status == SolveStatus::budget_exhausted) stop = true;
        if (o.status != SolveStatus::cover) return std::nullopt;
        return CoverSide::covered(piece, std::move(*o.cover));
    }

    Step by_blocks(const Graph& g) {
        const BlockDecomposition bd = blocks(g);
        if (bd.blocks.size() <= 1) return std::nullopt;
        std::vector<Subgraph> subs;
        std::vector<CoverSide> sides;
        for (const auto& b : bd.blocks) {
            subs.push_back(induced_subgraph(g, b));
            bool stop = false;
            auto s = side(subs.back().graph, stop);
            if (stop) return exhausted();
            if (!s) return std::nullopt;
            sides.push_back(std::move(*s));
        }
        ++trace_.block_folds;
        return found(g, fold_blocks(g, bd, subs, sides));
    }

    Step by_two_edge_cut(const Graph& g) {
        const ConnectivityReport rep = connectivity_report(g);
        for (const auto& cut : rep.edge_cuts_le2) {
            if (cut.size() != 2) continue;
            const Edge e1 = cut[0], e2 = cut[1];
            if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
            const Graph rest = without_edges(g, cut);
            const auto parts = connected_components(rest);
            if (parts.size() != 2) continue;
            const auto& a = parts[0];
            auto in_a = [&](VertexId v) { return std::binary_search(a.begin(), a.end(), v); };
            if (in_a(e1.u) == in_a(e1.v) || in_a(e2.u) == in_a(e2.v)) continue;
            const VertexId u = in_a(e1.u) ? e1.u : e1.v, v = in_a(e1.u) ? e1.v : e1.u;
            const VertexId w = in_a(e2.u) ? e2.u : e2.v, x = in_a(e2.u) ? e2.v : e2.u;

            const Subgraph sa = induced_subgraph(g, parts[0]);
            const Subgraph sb = induced_subgraph(g, parts[1]);
            if (is_known_exception(sa.graph) && sa.graph.order() == 3) continue;
            if (is_known_exception(sb.graph) && sb.graph.order() == 3) continue;
            bool stop = false;
            auto side_a = side(sa.graph, stop);
            if (stop) return exhausted();
            if (!side_a) continue;
            auto side_b = side(sb.graph, stop);
            if (stop) return exhausted();
            if (!side_b) continue;

            Composite c = bridge2_compose(*side_a, *sa.to_child[u], *sa.to_child[w], *side_b, *sb.to_child[v],
                                          *sb.to_child[x]);
            std::vector<VertexId> to_g(c.graph.order());
            for (VertexId i = 0; i < sa.to_parent.size(); ++i) to_g[c.first_map[i]] = sa.to_parent[i];
            for (VertexId i = 0; i < sb.to_parent.size(); ++i) to_g[c.second_map[i]] = sb.to_parent[i];
            ++trace_.bridge_folds;
            return found(g, c.cover.relabeled(to_g));
        }
        return std::nullopt;
    }

    Step by_low_degree(const Graph& g) {
        VertexId v = 0;
        while (v < g.order() && g.degree(v) > 2) ++v;
        if (v == g.order()) return std::nullopt;
        const std::vector<VertexId> nb = g.neighbors(v);
        const Subgraph sub = without_vertex(g, v);

        if (nb.size() == 2 && !g.has_edge(nb[0], nb[1])) {
            const Graph smoothed = with_edge(sub.graph, Edge(*sub.to_child[nb[0]], *sub.to_child[nb[1]]));
            SolveOutcome o = solve(smoothed);
            if (o.status == SolveStatus::budget_exhausted) return o;
            if (o.status == SolveStatus::cover) {
                ++trace_.smoothings;
                const Paths ps = relabel_paths(o.cover->paths(), sub.to_parent);
                return found(g, PathCover(subdivide_paths(ps, nb[0], nb[1], v)));
            }
        }
        SolveOutcome o = solve(sub.graph);
        if (o.status != SolveStatus::cover) return o.status == SolveStatus::budget_exhausted ? Step(o) : std::nullopt;
        ++trace_.deletions;
        Repair r = add_low_degree(g, relabel_paths(o.cover->paths(), sub.to_parent), v, nb, meter_);
        return std::move(r.outcome);
    }

    /// Short direct search before reducing. Reduced graphs are sometimes
    /// much harder for the search than the graph they came from.
    Step by_probe(const Graph& g) {
        if (g.order() < probe_min_order || g.order() > search_max_order) return std::nullopt;
        Budget b = meter_.budget();
        b.max_nodes = std::min<std::uint64_t>(probe_nodes, b.max_nodes);
        BudgetMeter probe(b);
        SolveOutcome o = complete_cover(g, {}, probe);
        meter_.charge(probe.nodes());
        if (o.status == SolveStatus::budget_exhausted) return meter_.exhausted() ? Step(exhausted()) : std::nullopt;
        ++trace_.probes;
        return o;
    }

    static constexpr std::size_t probe_min_order = 8;
    static constexpr std::uint64_t probe_nodes = 20'000;

    Step by_degree3(const Graph& g) {
        for (VertexId v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 3) continue;
            const auto& nb = g.neighbors(v);
            LiftMode mode = TriangleLift{};
            for (std::size_t i = 0; i < 3 && std::holds_alternative<TriangleLift>(mode); ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    if (!g.has_edge(nb[i], nb[j])) {
                        mode = AddedEdgeLift{nb[i], nb[j]};
                        break;
                    }
            const Degree3Reduction red = degree3_reduction(g, v, mode);
            if (is_known_exception(red.graph)) continue;
            SolveOutcome o = solve(red.graph);
            if (o.status == SolveStatus::budget_exhausted) return o;
            if (o.status != SolveStatus::cover) continue;
            Repair r = lift(g, v, relabel_paths(o.cover->paths(), red.to_full), mode, meter_);
            switch (r.route) {
                case Route::pattern: ++trace_.lift_patterns; break;
                case Route::local_completion: ++trace_.lift_local; break;
                case Route::global_fallback: ++trace_.lift_global; break;
            }
            return std::move(r.outcome);
        }
        return std::nullopt;
    }

    Step by_family(const Graph& g) {
        const std::size_t n = g.order();
        if (is_complete(g)) {
            if (n % 2 == 0) {
                ++trace_.families;
                return found(g, zigzag_cover(n));
            }
            if (n >= 7 && n <= search_max_order) {
                ++trace_.families;
                return hamiltonian_route(n, meter_);
            }
            return std::nullopt;
        }
        if (g.min_degree() == 2 && g.max_degree() == 2 && n >= 4) {
            std::vector<VertexId> seq{0};
            while (seq.size() < n) {
                const auto& nb = g.neighbors(seq.back());
                seq.push_back(seq.size() >= 2 && nb[0] == seq[seq.size() - 2] ? nb[1] : nb[0]);
            }
            ++trace_.families;
            return found(g, PathCover(cycle_paths(seq)));
        }
        if (auto sides = complete_bipartition(g)) {
            const auto& [a, b] = *sides;
            std::vector<VertexId> map(a);
            map.insert(map.end(), b.begin(), b.end());
            ++trace_.families;
            return found(g, complete_bipartite_cover(a.size(), b.size()).relabeled(map));
        }
        return std::nullopt;
    }

    static std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> complete_bipartition(
        const Graph& g) {
        std::vector<int> colour(g.order(), -1);
        colour[0] = 0;
        std::vector<VertexId> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (VertexId w : g.neighbors(queue[i])) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[queue[i]];
                    queue.push_back(w);
                } else if (colour[w] == colour[queue[i]]) {
                    return std::nullopt;
                }
            }
        std::vector<VertexId> a, b;
        for (VertexId v = 0; v < g.order(); ++v) (colour[v] == 0 ? a : b).push_back(v);
        if (a.size() * b.size() != g.size()) return std::nullopt;
        return std::pair{a, b};
    }

    BudgetMeter& meter_;
    StructuredTrace& trace_;
};

}  // namespace detail

/// Structure-first solve of any graph (components are solved separately).
inline SolveOutcome solve_structured(const Graph& g, BudgetMeter& meter, StructuredTrace* trace = nullptr) {
    StructuredTrace local;
    const auto start = meter.nodes();
    const auto t0 = std::chrono::steady_clock::now();
    detail::StructuredSolver solver(meter, trace ? *trace : local);
    SolveOutcome o = g.order() == 0 ? SolveOutcome{SolveStatus::cover, PathCover{}, 0, {}} : solver.solve(g);
    o.nodes_explored = meter.nodes() - start;
    o.elapsed = std::chrono::steady_clock::now() - t0;
    if (o.status == SolveStatus::cover) detail::certify(g, *o.cover);
    return o;
}

inline SolveOutcome solve_structured(const Graph& g, Budget budget = {}, StructuredTrace* trace = nullptr) {
    BudgetMeter meter(budget);
    return solve_structured(g, meter, trace);
}

}  // namespace oppdc
