#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "oppdc/cover/path_cover.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

/// Directed cycle given by its cyclic vertex sequence (the closing arc
/// back->front is implicit).
using DiCycle = std::vector<VertexId>;
using CycleCover = std::vector<DiCycle>;

enum class ViolationKind {
    arc_missing,
    arc_duplicated,
    non_simple_path,
    non_edge_arc,
    begin_count,
    end_count,
    zero_length_at_non_isolated,
    cycle_too_short,
    too_many_cycles,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::arc_missing: return "arc-missing";
        case ViolationKind::arc_duplicated: return "arc-duplicated";
        case ViolationKind::non_simple_path: return "non-simple-path";
        case ViolationKind::non_edge_arc: return "non-edge-arc";
        case ViolationKind::begin_count: return "begin-count";
        case ViolationKind::end_count: return "end-count";
        case ViolationKind::zero_length_at_non_isolated: return "zero-length-at-non-isolated";
        case ViolationKind::cycle_too_short: return "cycle-too-short";
        case ViolationKind::too_many_cycles: return "too-many-cycles";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::optional<Arc> arc;
    std::optional<VertexId> vertex;
    std::optional<std::size_t> path;  // path or cycle id
    std::size_t count = 0;            // multiplicity, where meaningful

    std::string describe() const {
        std::string s = to_string(kind);
        if (arc) s += " arc " + to_string(*arc);
        if (vertex) s += " vertex " + std::to_string(*vertex);
        if (path) s += " path " + std::to_string(*path);
        if (kind == ViolationKind::arc_duplicated || kind == ViolationKind::begin_count ||
            kind == ViolationKind::end_count || kind == ViolationKind::too_many_cycles)
            s += " count " + std::to_string(count);
        return s;
    }

    auto key() const { return std::tie(kind, arc, vertex, path); }
    bool operator<(const Violation& o) const { return key() < o.key(); }
};

/// Outcome of a verification. valid iff violations is empty; violations are
/// exhaustive and ordered by kind, then arc, vertex and path id.
struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;

    std::string summary() const {
        if (valid) return "valid";
        std::string s = "invalid: " + std::to_string(violations.size()) + " violation(s)";
        for (const auto& v : violations) s += "\n  " + v.describe();
        return s;
    }
};

namespace detail {

inline void check_ids(const Graph& g, const std::vector<VertexId>& vs, const char* what, std::size_t id) {
    if (vs.empty()) throw InputError(std::string(what) + " " + std::to_string(id) + " is empty");
    for (VertexId v : vs)
        if (!g.contains(v))
            throw InputError(std::string(what) + " " + std::to_string(id) + " uses vertex " +
                             std::to_string(v) + " outside the graph (order " +
                             std::to_string(g.order()) + ")");
}

inline bool has_repeat(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) != vs.end();
}

/// Adds arc-missing / arc-duplicated violations given per-arc counts.
inline void check_arc_counts(const Graph& g, const std::map<Arc, std::size_t>& counts,
                             std::vector<Violation>& out) {
    for (const Edge& e : g.edges()) {
        for (Arc a : {Arc{e.u, e.v}, Arc{e.v, e.u}}) {
            auto it = counts.find(a);
            const std::size_t c = it == counts.end() ? 0 : it->second;
            if (c == 0) out.push_back({ViolationKind::arc_missing, a, {}, {}, 0});
            if (c > 1) out.push_back({ViolationKind::arc_duplicated, a, {}, {}, c});
        }
    }
}

inline VerifyReport finish(std::vector<Violation> v) {
    std::sort(v.begin(), v.end());
    VerifyReport r;
    r.valid = v.empty();
    r.violations = std::move(v);
    return r;
}

}  // namespace detail

/// Checks that c is an oriented perfect path double cover of g: every arc of
/// the symmetric orientation lies on exactly one path, every path is simple
/// and follows edges, and every vertex begins exactly one path and ends
/// exactly one. In strict mode zero-length paths are only allowed at
/// isolated vertices.
///
/// Throws InputError when c mentions a vertex outside g.
inline VerifyReport verify_oppdc(const Graph& g, const PathCover& c, bool strict_zero_length = true) {
    for (std::size_t i = 0; i < c.size(); ++i) detail::check_ids(g, c[i].vertices(), "path", i);

    std::vector<Violation> out;
    std::map<Arc, std::size_t> counts;
    std::vector<std::size_t> begins(g.order(), 0), ends(g.order(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const DiPath& p = c[i];
        if (detail::has_repeat(p.vertices()))
            out.push_back({ViolationKind::non_simple_path, {}, {}, i, 0});
        for (const Arc& a : p.arcs()) {
            if (g.has_edge(a.from, a.to))
                ++counts[a];
            else
                out.push_back({ViolationKind::non_edge_arc, a, {}, i, 0});
        }
        ++begins[p.front()];
        ++ends[p.back()];
        if (strict_zero_length && p.length() == 0 && g.degree(p.front()) > 0)
            out.push_back({ViolationKind::zero_length_at_non_isolated, {}, p.front(), i, 0});
    }
    detail::check_arc_counts(g, counts, out);
    for (VertexId v = 0; v < g.order(); ++v) {
        if (begins[v] != 1) out.push_back({ViolationKind::begin_count, {}, v, {}, begins[v]});
        if (ends[v] != 1) out.push_back({ViolationKind::end_count, {}, v, {}, ends[v]});
    }
    return detail::finish(std::move(out));
}

/// Checks that `cycles` is an oriented cycle double cover of g with at most
/// max_count cycles: every arc on exactly one cycle, cycles simple, of
/// length >= 3 and following edges.
inline VerifyReport verify_socdc(const Graph& g, const CycleCover& cycles, std::size_t max_count) {
    for (std::size_t i = 0; i < cycles.size(); ++i) detail::check_ids(g, cycles[i], "cycle", i);

    std::vector<Violation> out;
    std::map<Arc, std::size_t> counts;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const DiCycle& cyc = cycles[i];
        if (cyc.size() < 3) out.push_back({ViolationKind::cycle_too_short, {}, {}, i, cyc.size()});
        if (detail::has_repeat(cyc)) out.push_back({ViolationKind::non_simple_path, {}, {}, i, 0});
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const Arc a{cyc[k], cyc[(k + 1) % cyc.size()]};
            if (cyc.size() > 1 && g.has_edge(a.from, a.to))
                ++counts[a];
            else if (cyc.size() > 1)
                out.push_back({ViolationKind::non_edge_arc, a, {}, i, 0});
        }
    }
    detail::check_arc_counts(g, counts, out);
    if (cycles.size() > max_count)
        out.push_back({ViolationKind::too_many_cycles, {}, {}, {}, cycles.size()});
    return detail::finish(std::move(out));
}

}  // namespace oppdc
