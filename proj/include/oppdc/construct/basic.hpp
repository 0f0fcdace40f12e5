#pragma once

// Closed-form covers: cycles, complete bipartite graphs, Cartesian products.

#include <string>
#include <vector>

#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/graph/structure.hpp"

namespace oppdc {

namespace detail {

inline void require_valid(const Graph& g, const PathCover& c, const std::string& what) {
    const auto r = verify_oppdc(g, c, true);
    if (!r.valid) throw InputError(what + " is not a valid cover: " + r.summary());
}

/// Verify-after-construct gate shared by every surgery.
inline PathCover certified(const Graph& g, PathCover c, const std::string& what) {
    const auto r = verify_oppdc(g, c, true);
    if (!r.valid) throw ConstructionError(what + " produced an invalid cover: " + r.summary());
    return c;
}

}  // namespace detail

/// Cover of the cycle seq[0] seq[1] ... seq[k-1] with vertex v_i = seq[i-1]:
///   v_k v_{k-1};  v_{k-1} ... v_2 v_1 v_k;  v_{k-2} v_{k-1} v_k v_1;  v_i v_{i+1} (i <= k-3).
/// No validation; the caller owns the graph.
inline std::vector<DiPath> cycle_paths(const std::vector<VertexId>& seq) {
    const std::size_t k = seq.size();
    auto v = [&](std::size_t i) { return seq[i - 1]; };
    std::vector<DiPath> out;
    out.push_back(DiPath{v(k), v(k - 1)});
    std::vector<VertexId> down;
    for (std::size_t i = k - 1; i >= 1; --i) down.push_back(v(i));
    down.push_back(v(k));
    out.emplace_back(std::move(down));
    out.push_back(DiPath{v(k - 2), v(k - 1), v(k), v(1)});
    for (std::size_t i = 1; i + 3 <= k; ++i) out.push_back(DiPath{v(i), v(i + 1)});
    return out;
}

/// Cover of cycle_graph(n), vertex v_i numbered i-1.
inline PathCover cycle_cover(std::size_t n) {
    if (n <= 3)
        throw NonExistenceError("cycle_cover needs n >= 4 (C3 is K3, which has no cover)");
    std::vector<VertexId> seq(n);
    for (VertexId i = 0; i < n; ++i) seq[i] = i;
    return detail::certified(cycle_graph(n), PathCover(cycle_paths(seq)), "cycle_cover");
}

/// Cover of complete_bipartite_graph(n, m) by recursion on m; v_i is i-1
/// and w_j is n+j-1.
inline PathCover complete_bipartite_cover(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DomainError("complete_bipartite_cover needs n, m >= 1");
    auto v = [](std::size_t i) { return static_cast<VertexId>(i - 1); };
    auto w = [n](std::size_t j) { return static_cast<VertexId>(n + j - 1); };

    // from_v[i] = P^{v_i}, from_w[j] = P^{w_j}
    std::vector<DiPath> from_v(n + 1), from_w(m + 1);
    from_v[1] = DiPath{v(1), w(1)};
    from_w[1] = DiPath{w(1), v(n)};
    for (std::size_t i = 2; i <= n; ++i) from_v[i] = DiPath{v(i), w(1), v(i - 1)};

    for (std::size_t k = 2; k <= m; ++k) {
        std::vector<DiPath> next(n + 1);
        next[1] = DiPath{v(1), w(k)};
        from_w[k] = join(DiPath{w(k), v(n)}, from_v[n]);
        for (std::size_t i = 2; i <= n; ++i) next[i] = join(DiPath{v(i), w(k), v(i - 1)}, from_v[i - 1]);
        from_v = std::move(next);
    }

    std::vector<DiPath> paths(from_v.begin() + 1, from_v.end());
    paths.insert(paths.end(), from_w.begin() + 1, from_w.end());
    return detail::certified(complete_bipartite_graph(n, m), PathCover(std::move(paths)),
                             "complete_bipartite_cover");
}

/// Cover of g x h (numbered by product_vertex): the path of (u,v) runs
/// along P_u inside the copy of g at v and then along Q^v inside the copy
/// of h at u.
inline PathCover product_cover(const Graph& g, const PathCover& cg, const Graph& h, const PathCover& ch) {
    detail::require_valid(g, cg, "product_cover: first cover");
    detail::require_valid(h, ch, "product_cover: second cover");
    if (g.min_degree() == 0 || h.min_degree() == 0)
        throw DomainError("product_cover: factors must not have isolated vertices");

    const std::size_t ho = h.order();
    std::vector<DiPath> out;
    out.reserve(g.order() * ho);
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = 0; v < ho; ++v) {
            std::vector<VertexId> vs;
            for (VertexId x : cg.ending_at(u).vertices()) vs.push_back(product_vertex(x, v, ho));
            const auto& q = ch.starting_at(v).vertices();
            for (std::size_t i = 1; i < q.size(); ++i) vs.push_back(product_vertex(u, q[i], ho));
            out.emplace_back(std::move(vs));
        }
    return detail::certified(cartesian_product(g, h), PathCover(std::move(out)), "product_cover");
}

}  // namespace oppdc
