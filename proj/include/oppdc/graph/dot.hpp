#pragma once

#include <array>
#include <optional>
#include <string>

#include "oppdc/cover/path_cover.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

/// Graphviz rendering. Without a cover every edge is drawn once with
/// dir=none; with a cover every arc is drawn in its path's colour and
/// labelled with the path id.
inline std::string emit_dot(const Graph& g, const std::optional<PathCover>& cover = std::nullopt) {
    static constexpr std::array<const char*, 10> palette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    std::string out = "digraph G {\n";
    for (VertexId v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    if (!cover) {
        for (const Edge& e : g.edges())
            out += "  " + std::to_string(e.u) + " -> " + std::to_string(e.v) + " [dir=none];\n";
    } else {
        for (std::size_t i = 0; i < cover->size(); ++i) {
            const auto& p = (*cover)[i];
            for (VertexId v : p.vertices())
                if (!g.contains(v)) throw InputError("emit_dot: cover mentions vertex outside graph");
            const std::string attrs = std::string(" [color=\"") + palette[i % palette.size()] +
                                      "\", label=\"P" + std::to_string(i) + "\"];\n";
            for (const Arc& a : p.arcs())
                out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) + attrs;
        }
    }
    out += "}\n";
    return out;
}

}  // namespace oppdc
