#pragma once

// Small-graph enumeration and random instance generators shared by the
// unit, property and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oppdc/oppdc.hpp"

namespace oppdc::testing {

/// All connected graphs on n vertices up to isomorphism. The canonical form
/// is the least edge bitmask over all relabellings, so this is only meant
/// for n <= 6.
inline std::vector<Graph> connected_graphs(std::size_t n) {
    std::vector<Edge> slots;
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            slot_of[i][j] = slot_of[j][i] = slots.size();
            slots.emplace_back(i, j);
        }
    std::vector<std::vector<std::size_t>> moves;
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    do {
        std::vector<std::size_t> m;
        for (const Edge& e : slots) m.push_back(slot_of[perm[e.u]][perm[e.v]]);
        moves.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto edges_of = [&](std::uint64_t mask) {
        std::vector<Edge> es;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) es.push_back(slots[k]);
        return es;
    };
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        bool least = true;
        for (const auto& m : moves) {
            std::uint64_t image = 0;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (mask >> k & 1) image |= std::uint64_t{1} << m[k];
            if (image < mask) {
                least = false;
                break;
            }
        }
        if (!least) continue;
        Graph g(n, edges_of(mask));
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<Graph> connected_graphs_up_to(std::size_t n) {
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (Graph& g : connected_graphs(k)) out.push_back(std::move(g));
    return out;
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// G(n, p) conditioned on connectivity: a random spanning tree plus extra
/// edges with probability p.
inline Graph random_connected(Rng& rng, std::size_t n, double p) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::set<Edge> es;
    for (std::size_t i = 1; i < n; ++i) es.emplace(order[i], order[uniform(rng, 0, i - 1)]);
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i)
            if (coin(rng, p)) es.emplace(i, j);
    return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    std::vector<Edge> es;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i)
            if (coin(rng, p)) es.emplace_back(i, j);
    return Graph(n, es);
}

/// A connected graph other than K3 and K5, with a cover from the solver.
struct Covered {
    Graph graph;
    PathCover cover;
};

inline Covered random_covered(Rng& rng, std::size_t min_n, std::size_t max_n, double p) {
    for (;;) {
        Graph g = random_connected(rng, uniform(rng, min_n, max_n), p);
        if (is_known_exception(g) || g.order() < 2) continue;
        SolveOutcome o = solve_structured(g);
        if (o.status == SolveStatus::cover) return {std::move(g), std::move(*o.cover)};
    }
}

/// A side for the compositions: a covered graph, or K3 / K5 bare.
inline CoverSide random_side(Rng& rng, std::size_t max_n, bool allow_k3) {
    const std::size_t pick = uniform(rng, 0, 5);
    if (pick == 0 && allow_k3) return CoverSide::exceptional(complete_graph(3));
    if (pick == 1) return CoverSide::exceptional(complete_graph(5));
    Covered c = random_covered(rng, 2, max_n, 0.4);
    return CoverSide::covered(std::move(c.graph), std::move(c.cover));
}

}  // namespace oppdc::testing
