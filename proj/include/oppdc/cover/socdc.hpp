#pragma once

// Bridge between path covers of G and small oriented cycle double covers of
// the apex graph G + a (a joined to every vertex): each path u..v of the
// cover closes into the directed cycle a -> u .. v -> a.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/edge_list.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

struct ApexCycleCover {
    Graph apex_graph;
    CycleCover cycles;
    VertexId apex = 0;
};

/// Graph g plus a new vertex (numbered g.order()) adjacent to every vertex.
inline Graph apex_extension(const Graph& g) {
    const auto a = static_cast<VertexId>(g.order());
    std::vector<Edge> extra;
    for (VertexId v = 0; v < a; ++v) extra.emplace_back(v, a);
    return with_edges(g, extra, g.order() + 1);
}

/// Converts a valid strict cover of g (no isolated vertices) into an SOCDC
/// of the apex graph with exactly |V(g)| cycles, one per path, in path order.
inline ApexCycleCover oppdc_to_socdc(const Graph& g, const PathCover& c) {
    const VerifyReport report = verify_oppdc(g, c, true);
    if (!report.valid) throw DomainError("oppdc_to_socdc: input is not a valid cover: " + report.summary());
    for (const auto& p : c.paths())
        if (p.length() == 0)
            throw DomainError("oppdc_to_socdc: zero-length path at vertex " + std::to_string(p.front()) +
                              " cannot close into a cycle");

    ApexCycleCover out;
    out.apex_graph = apex_extension(g);
    out.apex = static_cast<VertexId>(g.order());
    out.cycles.reserve(c.size());
    for (const auto& p : c.paths()) {
        DiCycle cyc{out.apex};
        cyc.insert(cyc.end(), p.vertices().begin(), p.vertices().end());
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

/// Deletes the apex from every cycle of an SOCDC of an apex graph. Vertex
/// ids above the apex move down by one (the numbering of without_vertex),
/// so the result is a cover of apex_graph minus the apex.
///
/// Every cycle must pass through the apex; a cycle avoiding it is rejected.
inline PathCover socdc_to_oppdc(const Graph& apex_graph, VertexId apex, const CycleCover& cycles) {
    if (!apex_graph.contains(apex)) throw InputError("apex outside the graph");
    if (apex_graph.degree(apex) + 1 != apex_graph.order())
        throw DomainError("socdc_to_oppdc: vertex " + std::to_string(apex) +
                          " is not adjacent to all other vertices");
    const std::size_t n = apex_graph.order();
    const VerifyReport report = verify_socdc(apex_graph, cycles, n == 0 ? 0 : n - 1);
    if (!report.valid) throw DomainError("socdc_to_oppdc: input is not a valid SOCDC: " + report.summary());

    auto shift = [apex](VertexId v) { return v > apex ? v - 1 : v; };
    std::vector<DiPath> paths;
    paths.reserve(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const DiCycle& cyc = cycles[i];
        auto at = std::find(cyc.begin(), cyc.end(), apex);
        if (at == cyc.end())
            throw DomainError("socdc_to_oppdc: cycle " + std::to_string(i) + " avoids the apex");
        std::vector<VertexId> vs;
        for (auto it = at + 1; it != cyc.end(); ++it) vs.push_back(shift(*it));
        for (auto it = cyc.begin(); it != at; ++it) vs.push_back(shift(*it));
        paths.emplace_back(std::move(vs));
    }
    return PathCover(std::move(paths));
}

/// Cycle text format: "cycles k" followed by k lines of vertex ids.
inline CycleCover parse_cycles(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && detail::is_blank(lines[i])) ++i;
    if (i == lines.size() || lines[i].substr(0, 6) != "cycles")
        throw ParseError("expected header 'cycles k'", i + 1);
    const std::size_t k = detail::read_integers(lines[i].substr(6), 1, i + 1, "cycle count")[0];
    CycleCover out;
    for (++i; i < lines.size(); ++i) {
        if (detail::is_blank(lines[i])) continue;
        std::istringstream in{std::string(lines[i])};
        DiCycle cyc;
        std::string token;
        while (in >> token) {
            const auto v = detail::read_integers(token, 1, i + 1, "vertex id")[0];
            cyc.push_back(static_cast<VertexId>(v));
        }
        out.push_back(std::move(cyc));
    }
    if (out.size() != k)
        throw ParseError("header announces " + std::to_string(k) + " cycles, found " +
                             std::to_string(out.size()),
                         lines.size());
    return out;
}

inline std::string emit_cycles(const CycleCover& cycles) {
    std::string out = "cycles " + std::to_string(cycles.size()) + "\n";
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace oppdc
