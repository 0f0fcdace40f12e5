#pragma once

// Folding per-block covers along the block-cut tree, and covers of block
// graphs (every block a clique).

#include <optional>
#include <string>
#include <vector>

#include "oppdc/construct/compose.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/structure.hpp"
#include "oppdc/solve/complete_graph.hpp"

namespace oppdc {

namespace detail {

/// Glues the pieces of a connected graph (one per block, numbered like
/// induced_subgraph of the block) into a cover of g. Starts at the first
/// covered block, or at block 0 when every block is K3 or K5, and glues
/// the remaining blocks in order of first contact.
inline PathCover fold_blocks(const Graph& g, const BlockDecomposition& bd, const std::vector<Subgraph>& subs,
                             const std::vector<CoverSide>& sides) {
    const std::size_t nb = sides.size();
    std::size_t root = 0;
    while (root < nb && !sides[root].cover) ++root;
    if (root == nb) root = 0;

    CoverSide cur = sides[root];
    std::vector<std::int64_t> cur_of(g.order(), -1);
    std::vector<VertexId> to_g;
    for (VertexId x = 0; x < subs[root].to_parent.size(); ++x) {
        cur_of[subs[root].to_parent[x]] = x;
        to_g.push_back(subs[root].to_parent[x]);
    }
    std::vector<char> done(nb, 0);
    done[root] = 1;
    for (std::size_t glued = 1; glued < nb;) {
        bool progress = false;
        for (std::size_t i = 0; i < nb; ++i) {
            if (done[i]) continue;
            std::optional<VertexId> shared;
            for (VertexId v : bd.blocks[i])
                if (cur_of[v] >= 0) shared = v;
            if (!shared) continue;
            Composite c = glue_at_vertex(cur, static_cast<VertexId>(cur_of[*shared]), sides[i],
                                         *subs[i].to_child[*shared]);
            to_g.resize(c.graph.order());
            for (VertexId x = 0; x < subs[i].to_parent.size(); ++x) {
                const VertexId gv = subs[i].to_parent[x];
                cur_of[gv] = c.second_map[x];
                to_g[c.second_map[x]] = gv;
            }
            cur = CoverSide::covered(std::move(c.graph), std::move(c.cover));
            done[i] = 1;
            ++glued;
            progress = true;
        }
        if (!progress) throw DomainError("fold_blocks: blocks do not form a connected graph");
    }
    if (!cur.cover) throw NonExistenceError("a lone K" + std::to_string(cur.graph.order()) + " has no cover");
    return certified(g, cur.cover->relabeled(to_g), "fold_blocks");
}

}  // namespace detail

/// Cover of a graph whose blocks are all cliques, built from clique covers
/// glued at the cut vertices. Fails only for K3 and K5 (alone or as a
/// whole component).
inline PathCover block_graph_cover(const Graph& g) {
    std::vector<DiPath> out;
    for (const auto& comp : connected_components(g)) {
        const Subgraph cs = induced_subgraph(g, comp);
        if (is_known_exception(cs.graph))
            throw NonExistenceError("block_graph_cover: component K" + std::to_string(cs.graph.order()) +
                                    " has no cover");
        const BlockDecomposition bd = blocks(cs.graph);
        std::vector<Subgraph> subs;
        std::vector<CoverSide> sides;
        for (const auto& b : bd.blocks) {
            subs.push_back(induced_subgraph(cs.graph, b));
            const Graph& bg = subs.back().graph;
            if (!is_complete(bg)) throw DomainError("block_graph_cover: a block is not a clique");
            if (is_known_exception(bg))
                sides.push_back(CoverSide::exceptional(bg));
            else
                sides.push_back(CoverSide::covered(bg, complete_graph_cover(bg.order())));
        }
        const PathCover c = detail::fold_blocks(cs.graph, bd, subs, sides);
        const PathCover mapped = c.relabeled(cs.to_parent);
        out.insert(out.end(), mapped.paths().begin(), mapped.paths().end());
    }
    return detail::certified(g, PathCover(std::move(out)), "block_graph_cover");
}

}  // namespace oppdc
