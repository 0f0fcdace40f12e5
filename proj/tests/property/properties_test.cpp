#include <gtest/gtest.h>

#include <set>

#include "oppdc/oppdc.hpp"
#include "support/graphs.hpp"

using namespace oppdc;
using oppdc::testing::Rng;
using oppdc::testing::coin;
using oppdc::testing::uniform;

namespace {

bool valid(const Graph& g, const PathCover& c) { return verify_oppdc(g, c).valid; }

VertexId any_vertex(Rng& rng, const Graph& g) { return static_cast<VertexId>(uniform(rng, 0, g.order() - 1)); }

struct EarProgram {
    Graph graph;
    EarDecomposition decomposition;
};

EarProgram random_ear_program(Rng& rng) {
    const std::size_t base = uniform(rng, 4, 7);
    EarDecomposition d;
    std::vector<Edge> es;
    for (VertexId i = 0; i < base; ++i) {
        d.base_cycle.push_back(i);
        es.emplace_back(std::min<VertexId>(i, (i + 1) % base), std::max<VertexId>(i, (i + 1) % base));
    }
    auto n = static_cast<VertexId>(base);
    const std::size_t ears = uniform(rng, 0, 4);
    for (std::size_t k = 0; k < ears; ++k) {
        const auto x = static_cast<VertexId>(uniform(rng, 0, n - 1));
        auto y = static_cast<VertexId>(uniform(rng, 0, n - 2));
        if (y >= x) ++y;
        std::vector<VertexId> ear{x};
        const std::size_t len = uniform(rng, 2, 4);
        for (std::size_t i = 1; i < len; ++i) ear.push_back(n++);
        ear.push_back(y);
        for (std::size_t i = 0; i + 1 < ear.size(); ++i)
            es.emplace_back(std::min(ear[i], ear[i + 1]), std::max(ear[i], ear[i + 1]));
        d.ears.push_back(std::move(ear));
    }
    return {Graph(n, es), std::move(d)};
}

/// Random attached cycle partition; nullopt when the draw repeats an edge.
std::optional<std::pair<Graph, CycleDecomposition>> random_cycle_program(Rng& rng) {
    CycleDecomposition d;
    std::set<Edge> es;
    const std::size_t first = uniform(rng, 4, 6);
    std::vector<VertexId> c0;
    for (VertexId i = 0; i < first; ++i) c0.push_back(i);
    auto n = static_cast<VertexId>(first);
    auto add_cycle = [&](const std::vector<VertexId>& c) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const VertexId a = c[i], b = c[(i + 1) % c.size()];
            if (!es.emplace(std::min(a, b), std::max(a, b)).second) return false;
        }
        d.cycles.push_back(c);
        return true;
    };
    add_cycle(c0);
    const std::size_t more = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < more; ++k) {
        const std::size_t shared = uniform(rng, 1, 3), fresh = uniform(rng, 2, 4);
        std::vector<VertexId> pool(n);
        std::iota(pool.begin(), pool.end(), VertexId{0});
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<VertexId> c(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(shared, n)));
        for (std::size_t i = 0; i < fresh; ++i) c.push_back(n++);
        std::shuffle(c.begin(), c.end(), rng);
        if (!add_cycle(c)) return std::nullopt;
    }
    return std::pair{Graph(n, std::vector<Edge>(es.begin(), es.end())), std::move(d)};
}

}  // namespace

TEST(Properties, GlueClosure) {
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        const CoverSide a = oppdc::testing::random_side(rng, 7, true);
        const CoverSide b = oppdc::testing::random_side(rng, 7, true);
        const Composite c = glue_at_vertex(a, any_vertex(rng, a.graph), b, any_vertex(rng, b.graph));
        ASSERT_TRUE(valid(c.graph, c.cover)) << emit_graph6(a.graph) << " + " << emit_graph6(b.graph);
        EXPECT_EQ(c.graph.order(), a.graph.order() + b.graph.order() - 1);
        EXPECT_EQ(c.cover.size(), c.graph.order());
    }
}

TEST(Properties, BridgeClosure) {
    Rng rng(103);
    for (int t = 0; t < 100; ++t) {
        const CoverSide a = oppdc::testing::random_side(rng, 7, false);
        const CoverSide b = oppdc::testing::random_side(rng, 7, false);
        const VertexId u = any_vertex(rng, a.graph), v = any_vertex(rng, b.graph);
        VertexId w = u, x = v;
        while (w == u) w = any_vertex(rng, a.graph);
        while (x == v) x = any_vertex(rng, b.graph);
        const Composite c = bridge2_compose(a, u, w, b, v, x);
        ASSERT_TRUE(valid(c.graph, c.cover)) << emit_graph6(a.graph) << " + " << emit_graph6(b.graph);
        EXPECT_EQ(c.graph.size(), a.graph.size() + b.graph.size() + 2);
        EXPECT_EQ(c.cover.size(), c.graph.order());
    }
}

TEST(Properties, ProductClosure) {
    Rng rng(107);
    for (int t = 0; t < 100; ++t) {
        const auto [g, cg] = oppdc::testing::random_covered(rng, 2, 5, 0.5);
        const auto [h, ch] = oppdc::testing::random_covered(rng, 2, 5, 0.5);
        const PathCover r = product_cover(g, cg, h, ch);
        EXPECT_TRUE(valid(cartesian_product(g, h), r));
        EXPECT_EQ(r.size(), g.order() * h.order());
    }
}

TEST(Properties, EarPrograms) {
    Rng rng(109);
    for (int t = 0; t < 50; ++t) {
        const auto [g, d] = random_ear_program(rng);
        ASSERT_TRUE(is_valid_ear_decomposition(g, d, true));
        const PathCover c = ear_cover(g, d);
        EXPECT_TRUE(valid(g, c)) << emit_graph6(g);
        EXPECT_EQ(c.size(), g.order());
    }
}

TEST(Properties, CyclePrograms) {
    Rng rng(113);
    int built = 0, uncovered = 0;
    for (int t = 0; t < 200; ++t) {
        auto program = random_cycle_program(rng);
        if (!program) continue;
        const auto& [g, d] = *program;
        if (!is_valid_cycle_decomposition(g, d, true)) continue;
        try {
            EXPECT_TRUE(valid(g, cycle_partition_cover(g, d)));
            ++built;
        } catch (const CaseNotCovered&) {
            ++uncovered;
        }
    }
    EXPECT_GT(built, 20);
    RecordProperty("case_not_covered", uncovered);
}

TEST(Properties, SubdivisionChains) {
    Rng rng(127);
    for (int t = 0; t < 40; ++t) {
        auto [g, c] = oppdc::testing::random_covered(rng, 2, 7, 0.4);
        for (int k = 0; k < 4; ++k) {
            const Edge e = g.edges()[uniform(rng, 0, g.size() - 1)];
            Extension s = subdivide_edge(g, c, e.u, e.v);
            ASSERT_TRUE(valid(s.graph, s.cover));
            EXPECT_EQ(s.cover.size(), c.size() + 1);
            g = std::move(s.graph);
            c = std::move(s.cover);
        }
    }
}

TEST(Properties, LowDegreeAdditions) {
    Rng rng(131);
    for (int t = 0; t < 60; ++t) {
        const auto [g, c] = oppdc::testing::random_covered(rng, 2, 8, 0.4);
        const VertexId u = any_vertex(rng, g);
        VertexId w = u;
        while (w == u) w = any_vertex(rng, g);
        const std::vector<VertexId> nb = coin(rng, 0.3) ? std::vector<VertexId>{u} : std::vector<VertexId>{u, w};
        const Graph grown = with_edges(g, [&] {
            std::vector<Edge> es;
            for (VertexId x : nb) es.emplace_back(x, static_cast<VertexId>(g.order()));
            return es;
        }(), g.order() + 1);
        if (is_known_exception(grown)) {
            EXPECT_THROW(add_vertex_low_degree(g, c, nb), NonExistenceError);
            continue;
        }
        const Extension e = add_vertex_low_degree(g, c, nb);
        EXPECT_EQ(e.graph, grown);
        EXPECT_TRUE(valid(e.graph, e.cover));
    }
}

TEST(Properties, FixtureMutationsAreRejected) {
    for (FixtureName name : all_fixtures) {
        const Fixture f = paper_fixture(name);
        for (std::size_t i = 0; i < f.cover.size(); ++i) {
            const auto& vs = f.cover[i].vertices();
            for (std::size_t k = 1; k < vs.size(); ++k)
                for (VertexId other = 0; other < f.graph.order(); ++other) {
                    if (other == vs[k]) continue;
                    std::vector<DiPath> paths = f.cover.paths();
                    std::vector<VertexId> changed = vs;
                    changed[k] = other;
                    paths[i] = DiPath(changed);
                    EXPECT_FALSE(valid(f.graph, PathCover(paths))) << to_string(name) << " path " << i;
                }
        }
    }
}

TEST(Properties, StructuredIsDeterministic) {
    Rng rng(137);
    for (int t = 0; t < 20; ++t) {
        const Graph g = oppdc::testing::random_connected(rng, uniform(rng, 4, 10), 0.4);
        const SolveOutcome a = solve_structured(g), b = solve_structured(g);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.nodes_explored, b.nodes_explored);
        EXPECT_EQ(a.cover, b.cover);
    }
}
