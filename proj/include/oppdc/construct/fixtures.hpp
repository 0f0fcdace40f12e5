#pragma once

// Five hand-built (graph, cover) pairs used as regression baselines and as
// building blocks by the K3/K5 compositions.
//
// Vertex letters map to ids alphabetically, primed letters after the
// unprimed ones:
//
//   fixture            ids
//   K3K3-cut-vertex    u0 v1 w2 x3 y4                     blocks {u,v,w} {w,x,y}, cut w
//   K5K3-cut-vertex    s0 t1 u2 v3 w4 x5 y6               blocks {u,v,w,x,y} {v,s,t}, cut v
//   K5K5-cut-vertex    u0 v1 w2 x3 y4 u'5 w'6 x'7 y'8     blocks {u,v,w,x,y} {u',v,w',x',y'}, cut v
//   K5-minus-edge      u0 v1 w2 x3 y4                     K5 without uv
//   K5K5-two-bridge    u0 v1 w2 x3 y4 u'5 v'6 w'7 x'8 y'9 two K5s plus uu', vv'

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oppdc/cover/path_cover.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"

namespace oppdc {

enum class FixtureName { k3k3_cut_vertex, k5k3_cut_vertex, k5k5_cut_vertex, k5_minus_edge, k5k5_two_bridge };

inline constexpr std::array<FixtureName, 5> all_fixtures = {
    FixtureName::k3k3_cut_vertex, FixtureName::k5k3_cut_vertex, FixtureName::k5k5_cut_vertex,
    FixtureName::k5_minus_edge, FixtureName::k5k5_two_bridge};

inline const char* to_string(FixtureName f) {
    switch (f) {
        case FixtureName::k3k3_cut_vertex: return "K3K3-cut-vertex";
        case FixtureName::k5k3_cut_vertex: return "K5K3-cut-vertex";
        case FixtureName::k5k5_cut_vertex: return "K5K5-cut-vertex";
        case FixtureName::k5_minus_edge: return "K5-minus-edge";
        case FixtureName::k5k5_two_bridge: return "K5K5-two-bridge";
    }
    return "?";
}

inline FixtureName fixture_from_string(std::string_view name) {
    for (FixtureName f : all_fixtures)
        if (name == to_string(f)) return f;
    throw InputError("unknown fixture '" + std::string(name) + "'");
}

struct Fixture {
    Graph graph;
    PathCover cover;
    /// Letter label per vertex id ("u", "v'", ...).
    std::vector<std::string> labels;
};

namespace detail {

/// Builds a fixture from letter labels, clique/edge lists and paths written
/// as space separated labels.
inline Fixture lettered_fixture(std::vector<std::string> labels,
                                const std::vector<std::vector<std::string>>& cliques,
                                const std::vector<std::pair<std::string, std::string>>& extra_edges,
                                const std::vector<std::pair<std::string, std::string>>& missing_edges,
                                const std::vector<std::string>& paths) {
    std::map<std::string, VertexId> id;
    for (VertexId i = 0; i < labels.size(); ++i) id[labels[i]] = i;
    auto at = [&](const std::string& l) {
        auto it = id.find(l);
        if (it == id.end()) throw std::logic_error("fixture label " + l);
        return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& clique : cliques)
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                Edge e(at(clique[a]), at(clique[b]));
                bool missing = false;
                for (const auto& [p, q] : missing_edges)
                    if (Edge(at(p), at(q)) == e) missing = true;
                if (!missing) edges.push_back(e);
            }
    for (const auto& [p, q] : extra_edges) edges.emplace_back(at(p), at(q));

    std::vector<DiPath> ps;
    for (const auto& text : paths) {
        std::istringstream in(text);
        std::vector<VertexId> vs;
        std::string token;
        while (in >> token) vs.push_back(at(token));
        ps.emplace_back(std::move(vs));
    }
    return Fixture{Graph(labels.size(), edges), PathCover(std::move(ps)), std::move(labels)};
}

}  // namespace detail

inline Fixture paper_fixture(FixtureName name) {
    using detail::lettered_fixture;
    switch (name) {
        case FixtureName::k3k3_cut_vertex:
            // {uwxy, ywvu, xw, wuv, vwyx}
            return lettered_fixture({"u", "v", "w", "x", "y"}, {{"u", "v", "w"}, {"w", "x", "y"}}, {}, {},
                                    {"u w x y", "y w v u", "x w", "w u v", "v w y x"});
        case FixtureName::k5k3_cut_vertex:
            // P' \ {P'^u, P'^v} plus P^t = ts v u P'^u, P_t = vt, P_s = uvs, P^s = st v P'^v
            return lettered_fixture({"s", "t", "u", "v", "w", "x", "y"},
                                    {{"u", "v", "w", "x", "y"}, {"v", "s", "t"}}, {}, {},
                                    {"y v w u x", "w x v y u", "x y w v", "t s v u y x w", "v t", "u v s",
                                     "s t v x u w y"});
        case FixtureName::k5k5_cut_vertex:
            return lettered_fixture(
                {"u", "v", "w", "x", "y", "u'", "w'", "x'", "y'"},
                {{"u", "v", "w", "x", "y"}, {"u'", "v", "w'", "x'", "y'"}}, {}, {},
                {"u x w y v y' w' x' u'", "y w x u v u' x' w' y'", "x' v x", "u' v u", "x y u w v w' u' y' x'",
                 "w u y x v x' y' u' w'", "w' v w", "y' v", "v y"});
        case FixtureName::k5_minus_edge:
            // P' = {uyxw, yvwux, wxvyu, xywv, vxuwy}
            return lettered_fixture({"u", "v", "w", "x", "y"}, {{"u", "v", "w", "x", "y"}}, {}, {{"u", "v"}},
                                    {"u y x w", "y v w u x", "w x v y u", "x y w v", "v x u w y"});
        case FixtureName::k5k5_two_bridge:
            return lettered_fixture(
                {"u", "v", "w", "x", "y", "u'", "v'", "w'", "x'", "y'"},
                {{"u", "v", "w", "x", "y"}, {"u'", "v'", "w'", "x'", "y'"}}, {{"u", "u'"}, {"v", "v'"}}, {},
                {"u x y w v v' y' u' x' w'", "x v w u", "w x u v y", "y u u'", "v u w y x",
                 "v' x' y' w' u' u y v x w", "x' u' w' v'", "w' x' v' u' y'", "y' v' v", "u' v' w' y' x'"});
    }
    throw InputError("unknown fixture");
}

}  // namespace oppdc
