#pragma once

// Covers of complete graphs. Every path of a cover of K_n is Hamiltonian,
// so the covers of K_n are exactly the decompositions of the symmetric
// K_{n+1} into directed Hamiltonian cycles with one vertex deleted.

#include <vector>

#include "oppdc/budget.hpp"
#include "oppdc/cover/path_cover.hpp"
#include "oppdc/cover/socdc.hpp"
#include "oppdc/cover/verify.hpp"
#include "oppdc/error.hpp"
#include "oppdc/graph/graph.hpp"
#include "oppdc/solve/search.hpp"

namespace oppdc {

namespace detail {

/// Even n: the zigzag paths i, i+1, i-1, i+2, i-2, ..., i+n/2 (mod n) for
/// i < n/2 decompose K_n into Hamiltonian paths with distinct ends; each is
/// used in both directions.
inline PathCover zigzag_cover(std::size_t n) {
    if (n == 0 || n % 2) throw DomainError("zigzag_cover needs a positive even order");
    const std::size_t k = n / 2;
    std::vector<DiPath> out;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<VertexId> vs{static_cast<VertexId>(i)};
        for (std::size_t step = 1; vs.size() < n; ++step) {
            vs.push_back(static_cast<VertexId>((i + step) % n));
            if (vs.size() < n) vs.push_back(static_cast<VertexId>((i + n - step) % n));
        }
        DiPath p(std::move(vs));
        out.push_back(p.reversed());
        out.push_back(std::move(p));
    }
    PathCover c = ordered_by_start(std::move(out));
    certify(complete_graph(n), c);
    return c;
}

/// Searches a directed Hamiltonian decomposition of K_{n+1} by searching the
/// cover of K_n it induces, with the first path fixed to 0 1 ... n-1 (every
/// cover can be relabelled to contain it). The cycles are closed through
/// the apex, checked as a cycle double cover and opened again.
inline SolveOutcome hamiltonian_route(std::size_t n, BudgetMeter& meter) {
    const Graph kn = complete_graph(n);
    std::vector<VertexId> first(n);
    for (VertexId i = 0; i < n; ++i) first[i] = i;
    const std::vector<DiPath> fixed{DiPath(first)};
    SolveOutcome o = complete_cover(kn, fixed, meter);
    if (o.status != SolveStatus::cover) return o;

    const ApexCycleCover dec = oppdc_to_socdc(kn, *o.cover);
    const VerifyReport r = verify_socdc(dec.apex_graph, dec.cycles, n);
    if (!r.valid) throw std::logic_error("Hamiltonian decomposition failed verification: " + r.summary());
    for (const auto& cyc : dec.cycles)
        if (cyc.size() != n + 1) throw std::logic_error("decomposition cycle is not Hamiltonian");
    o.cover = ordered_by_start(socdc_to_oppdc(dec.apex_graph, dec.apex, dec.cycles).paths());
    certify(kn, *o.cover);
    return o;
}

}  // namespace detail

/// Cover of K_n. Even n uses the zigzag decomposition; odd n >= 7 searches
/// a Hamiltonian decomposition of K_{n+1} and falls back to a plain search.
inline PathCover complete_graph_cover(std::size_t n, Budget budget = {}) {
    if (n == 0) throw DomainError("complete_graph_cover needs n >= 1");
    if (n == 3 || n == 5)
        throw NonExistenceError("K" + std::to_string(n) + " has no oriented perfect path double cover");
    if (n == 1) return PathCover{DiPath{0}};
    if (n % 2 == 0) return detail::zigzag_cover(n);
    if (n > search_max_order)
        throw DomainError("complete_graph_cover: odd n above " + std::to_string(search_max_order) +
                          " is out of search range");
    BudgetMeter meter(budget);
    SolveOutcome o = detail::hamiltonian_route(n, meter);
    if (o.status != SolveStatus::cover) o = solve_exhaustive(complete_graph(n), meter);
    if (o.status != SolveStatus::cover)
        throw ConstructionError("complete_graph_cover: search for K" + std::to_string(n) + " ran out of budget");
    return *o.cover;
}

}  // namespace oppdc
