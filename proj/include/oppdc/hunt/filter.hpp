#pragma once

// Minimal-counterexample filter. A smallest connected graph other than K3
// and K5 without a cover would have minimum degree >= 4, be 2-connected
// and 3-edge-connected, have at least 2n edges, an even-degree vertex, two
// adjacent vertices of degree > 2, no ear decomposition into long ears, no
// attached cycle partition and not be complete. Each rule below checks one
// of these and returns evidence when the graph fails it.

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/decompose.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/structure.hpp"
#include "oppdc/solve/structured.hpp"

namespace oppdc {

enum class Rule {
    min_degree,
    cut_vertex,
    two_edge_cut,
    sparse_2conn,
    all_odd_degrees,
    low_degree_pattern,
    long_ear_decomposition,
    cycle_partition,
    complete_graph,
    solved_directly,
};

inline constexpr std::array<Rule, 10> all_rules = {
    Rule::min_degree,      Rule::cut_vertex,         Rule::two_edge_cut,
    Rule::sparse_2conn,    Rule::all_odd_degrees,    Rule::low_degree_pattern,
    Rule::long_ear_decomposition, Rule::cycle_partition, Rule::complete_graph,
    Rule::solved_directly};

/// Rules that would apply but have no implementation.
inline const std::vector<std::string>& rules_not_implemented() {
    static const std::vector<std::string> names = {"union-of-two-trees"};
    return names;
}

inline const char* to_string(Rule r) {
    switch (r) {
        case Rule::min_degree: return "min-degree";
        case Rule::cut_vertex: return "cut-vertex";
        case Rule::two_edge_cut: return "two-edge-cut";
        case Rule::sparse_2conn: return "sparse-2conn";
        case Rule::all_odd_degrees: return "all-odd-degrees";
        case Rule::low_degree_pattern: return "low-degree-pattern";
        case Rule::long_ear_decomposition: return "long-ear-decomposition";
        case Rule::cycle_partition: return "cycle-partition";
        case Rule::complete_graph: return "complete-graph";
        case Rule::solved_directly: return "solved-directly";
    }
    return "?";
}

struct VertexWitness {
    VertexId vertex = 0;
};
struct EdgeCutWitness {
    std::vector<Edge> edges;
};
struct CountWitness {
    std::size_t order = 0;
    std::size_t size = 0;
};
/// The rule is a property of the degree sequence; nothing beyond the graph.
struct DegreeWitness {};

using Witness = std::variant<std::monostate, VertexWitness, EdgeCutWitness, CountWitness, DegreeWitness,
                             EarDecomposition, CycleDecomposition, PathCover>;

struct FilterVerdict {
    std::optional<Rule> eliminated_by;
    Witness witness;
    std::chrono::nanoseconds elapsed{0};

    bool survivor() const noexcept { return !eliminated_by; }
};

/// Re-checks a verdict's evidence against g from scratch.
inline bool revalidate(const Graph& g, const FilterVerdict& v) {
    if (!v.eliminated_by) return std::holds_alternative<std::monostate>(v.witness);
    switch (*v.eliminated_by) {
        case Rule::min_degree: {
            auto w = std::get_if<VertexWitness>(&v.witness);
            return w && g.contains(w->vertex) && g.degree(w->vertex) <= 3;
        }
        case Rule::cut_vertex: {
            auto w = std::get_if<VertexWitness>(&v.witness);
            if (!w || !g.contains(w->vertex)) return false;
            return !is_connected(without_vertex(g, w->vertex).graph);
        }
        case Rule::two_edge_cut: {
            auto w = std::get_if<EdgeCutWitness>(&v.witness);
            if (!w || w->edges.empty() || w->edges.size() > 2) return false;
            for (const Edge& e : w->edges)
                if (!g.has_edge(e.u, e.v)) return false;
            return component_count_without(g, w->edges) > 1;
        }
        case Rule::sparse_2conn: {
            auto w = std::get_if<CountWitness>(&v.witness);
            return w && w->order == g.order() && w->size == g.size() && g.size() + 1 <= 2 * g.order();
        }
        case Rule::all_odd_degrees:
            for (VertexId x = 0; x < g.order(); ++x)
                if (g.degree(x) % 2 == 0) return false;
            return std::holds_alternative<DegreeWitness>(v.witness);
        case Rule::low_degree_pattern:
            for (const Edge& e : g.edges())
                if (g.degree(e.u) > 2 && g.degree(e.v) > 2) return false;
            return std::holds_alternative<DegreeWitness>(v.witness);
        case Rule::long_ear_decomposition: {
            auto w = std::get_if<EarDecomposition>(&v.witness);
            return w && is_valid_ear_decomposition(g, *w, true);
        }
        case Rule::cycle_partition: {
            auto w = std::get_if<CycleDecomposition>(&v.witness);
            return w && is_valid_cycle_decomposition(g, *w, true);
        }
        case Rule::complete_graph:
            return is_complete(g) && std::holds_alternative<CountWitness>(v.witness);
        case Rule::solved_directly: {
            auto w = std::get_if<PathCover>(&v.witness);
            return w && verify_oppdc(g, *w, true).valid;
        }
    }
    return false;
}

/// Applies the rules in the order of `Rule`; the first that fires wins.
/// The searches (ear decomposition, cycle partition, direct solve) each
/// get `budget` on their own.
inline FilterVerdict filter_minimal_counterexample(const Graph& g, Budget budget = {}) {
    if (!is_connected(g) || g.order() == 0) throw DomainError("filter: the graph must be connected");
    if (is_known_exception(g))
        throw DomainError("filter: K" + std::to_string(g.order()) + " is a known exception");
    const auto t0 = std::chrono::steady_clock::now();
    FilterVerdict v;
    auto hit = [&](Rule r, Witness w) {
        v.eliminated_by = r;
        v.witness = std::move(w);
        v.elapsed = std::chrono::steady_clock::now() - t0;
        return v;
    };

    for (VertexId x = 0; x < g.order(); ++x)
        if (g.degree(x) == g.min_degree() && g.degree(x) <= 3) return hit(Rule::min_degree, VertexWitness{x});

    const ConnectivityReport rep = connectivity_report(g);
    if (!rep.cut_vertices.empty()) return hit(Rule::cut_vertex, VertexWitness{rep.cut_vertices.front()});
    if (!rep.edge_cuts_le2.empty()) return hit(Rule::two_edge_cut, EdgeCutWitness{rep.edge_cuts_le2.front()});
    if (g.size() + 1 <= 2 * g.order()) return hit(Rule::sparse_2conn, CountWitness{g.order(), g.size()});

    bool all_odd = true, adjacent_big = false;
    for (VertexId x = 0; x < g.order(); ++x) all_odd = all_odd && g.degree(x) % 2 == 1;
    for (const Edge& e : g.edges()) adjacent_big = adjacent_big || (g.degree(e.u) > 2 && g.degree(e.v) > 2);
    if (all_odd) return hit(Rule::all_odd_degrees, DegreeWitness{});
    if (!adjacent_big) return hit(Rule::low_degree_pattern, DegreeWitness{});

    if (g.order() <= 64) {
        EarSearchResult ears = find_ear_decomposition(g, true, budget);
        if (ears.decomposition) return hit(Rule::long_ear_decomposition, std::move(*ears.decomposition));
    }
    CycleSearchResult cycles = find_cycle_partition(g, budget);
    if (cycles.decomposition) return hit(Rule::cycle_partition, std::move(*cycles.decomposition));
    if (is_complete(g)) return hit(Rule::complete_graph, CountWitness{g.order(), g.size()});

    SolveOutcome o = solve_structured(g, budget);
    if (o.status == SolveStatus::cover) return hit(Rule::solved_directly, std::move(*o.cover));

    v.elapsed = std::chrono::steady_clock::now() - t0;
    return v;
}

}  // namespace oppdc
