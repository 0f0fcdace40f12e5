#pragma once

// Compares library verdicts with the brute-force reference on one graph.

#include <string>
#include <vector>

#include "brute_force.hpp"
#include "oppdc/oppdc.hpp"

namespace oracle {

inline Instance instance_of(const oppdc::Graph& g) {
    Instance inst{g.order(), {}};
    for (const auto& e : g.edges()) inst.edges.emplace_back(e.u, e.v);
    return inst;
}

inline oppdc::PathCover to_cover(const std::vector<Path>& ps) {
    std::vector<oppdc::DiPath> out;
    for (const Path& p : ps) out.emplace_back(std::vector<oppdc::VertexId>(p.begin(), p.end()));
    return oppdc::PathCover(std::move(out));
}

inline std::vector<Path> from_cover(const oppdc::PathCover& c) {
    std::vector<Path> out;
    for (const auto& p : c.paths()) out.emplace_back(p.vertices().begin(), p.vertices().end());
    return out;
}

struct Agreement {
    std::size_t systems = 0;
    std::size_t covers = 0;
    std::size_t verifier_mismatches = 0;
    std::vector<std::string> problems;

    bool ok() const { return verifier_mismatches == 0 && problems.empty(); }
};

inline Agreement check_graph(const oppdc::Graph& g) {
    const BruteForce bf(instance_of(g));
    Agreement a;
    bf.for_each_system([&](const std::vector<Path>& s) {
        ++a.systems;
        const bool expect = bf.valid(s);
        a.covers += expect;
        if (oppdc::verify_oppdc(g, to_cover(s), true).valid != expect) ++a.verifier_mismatches;
        // Dropping the last path breaks every cover.
        std::vector<Path> fewer(s.begin(), s.end() - 1);
        if (!fewer.empty() && oppdc::verify_oppdc(g, to_cover(fewer), true).valid != bf.valid(fewer))
            ++a.verifier_mismatches;
    });
    const std::string name = oppdc::emit_graph6(g);
    const auto status = a.covers ? oppdc::SolveStatus::cover : oppdc::SolveStatus::unsat;
    for (auto o : {oppdc::solve_exhaustive(g), oppdc::solve_structured(g)}) {
        if (o.status != status)
            a.problems.push_back(name + ": solver says " + oppdc::to_string(o.status));
        else if (o.cover && !bf.valid(from_cover(*o.cover)))
            a.problems.push_back(name + ": solver cover rejected by the reference");
    }
    return a;
}

}  // namespace oracle
