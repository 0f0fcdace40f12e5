#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oppdc/oppdc.hpp"
#include "support/graphs.hpp"

using namespace oppdc;

namespace {

bool valid(const Graph& g, const PathCover& c) { return verify_oppdc(g, c).valid; }

std::set<std::string> lettered(const Fixture& f) {
    std::set<std::string> out;
    for (const auto& p : f.cover.paths()) {
        std::string s;
        for (VertexId v : p.vertices()) s += f.labels[v];
        out.insert(s);
    }
    return out;
}

std::set<std::vector<VertexId>> as_set(const PathCover& c) {
    std::set<std::vector<VertexId>> out;
    for (const auto& p : c.paths()) out.insert(p.vertices());
    return out;
}

CoverSide covered(Graph g, PathCover c) { return CoverSide::covered(std::move(g), std::move(c)); }

}  // namespace

TEST(Fixtures, AllVerifyAndHaveOnePathPerVertex) {
    for (FixtureName name : all_fixtures) {
        const Fixture f = paper_fixture(name);
        EXPECT_TRUE(valid(f.graph, f.cover)) << to_string(name);
        EXPECT_EQ(f.cover.size(), f.graph.order()) << to_string(name);
        EXPECT_EQ(fixture_from_string(to_string(name)), name);
    }
    EXPECT_THROW(fixture_from_string("K4K4"), InputError);
}

TEST(Fixtures, TranscribedPaths) {
    EXPECT_EQ(lettered(paper_fixture(FixtureName::k5_minus_edge)),
              (std::set<std::string>{"uyxw", "yvwux", "wxvyu", "xywv", "vxuwy"}));
    EXPECT_EQ(paper_fixture(FixtureName::k5_minus_edge).cover.total_length(), 18u);
    EXPECT_EQ(lettered(paper_fixture(FixtureName::k3k3_cut_vertex)),
              (std::set<std::string>{"uwxy", "ywvu", "xw", "wuv", "vwyx"}));
    const Fixture two = paper_fixture(FixtureName::k5k5_two_bridge);
    EXPECT_EQ(two.cover.size(), 10u);
    EXPECT_EQ(lettered(two).count("uxywvv'y'u'x'w'"), 1u);
}

TEST(CycleCover, FourCycleByFormula) {
    // 1-based {43, 3214, 2341, 12}
    EXPECT_EQ(as_set(cycle_cover(4)),
              (std::set<std::vector<VertexId>>{{3, 2}, {2, 1, 0, 3}, {1, 2, 3, 0}, {0, 1}}));
    EXPECT_EQ(cycle_cover(4).total_length(), 8u);
}

TEST(CycleCover, RangeAndErrors) {
    for (std::size_t n = 4; n <= 50; ++n) {
        const PathCover c = cycle_cover(n);
        EXPECT_TRUE(valid(cycle_graph(n), c)) << n;
        EXPECT_EQ(c.size(), n);
    }
    EXPECT_THROW(cycle_cover(3), NonExistenceError);
    EXPECT_THROW(cycle_cover(2), DomainError);
}

TEST(Biclique, BaseCases) {
    EXPECT_EQ(as_set(complete_bipartite_cover(1, 1)), (std::set<std::vector<VertexId>>{{0, 1}, {1, 0}}));
    // v1 v2 w1 = 0 1 2: {v1w1, w1v2, v2w1v1}
    EXPECT_EQ(as_set(complete_bipartite_cover(2, 1)),
              (std::set<std::vector<VertexId>>{{0, 2}, {2, 1}, {1, 2, 0}}));
    const PathCover c = complete_bipartite_cover(3, 3);
    EXPECT_EQ(c.size(), 6u);
    EXPECT_EQ(c.total_length(), 18u);
    EXPECT_TRUE(valid(complete_bipartite_graph(3, 3), c));
    EXPECT_THROW(complete_bipartite_cover(0, 2), DomainError);
}

TEST(Biclique, AllSmall) {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t m = 1; m <= 12; ++m) {
            const PathCover c = complete_bipartite_cover(n, m);
            EXPECT_TRUE(valid(complete_bipartite_graph(n, m), c)) << n << "," << m;
            EXPECT_EQ(c.size(), n + m);
            EXPECT_EQ(c.total_length(), 2 * n * m);
        }
}

TEST(Product, Examples) {
    const PathCover k2{DiPath{0, 1}, DiPath{1, 0}};
    const PathCover sq = product_cover(complete_graph(2), k2, complete_graph(2), k2);
    EXPECT_EQ(sq.size(), 4u);
    for (const auto& p : sq.paths()) EXPECT_EQ(p.length(), 2u);
    EXPECT_TRUE(valid(cartesian_product(complete_graph(2), complete_graph(2)), sq));

    const PathCover c4k2 = product_cover(cycle_graph(4), cycle_cover(4), complete_graph(2), k2);
    EXPECT_EQ(c4k2.size(), 8u);
    EXPECT_TRUE(valid(cartesian_product(cycle_graph(4), complete_graph(2)), c4k2));

    EXPECT_THROW(product_cover(cycle_graph(4), cycle_cover(4), Graph(1), PathCover{DiPath{0}}), DomainError);
}

TEST(Product, PathLengthsAddUp) {
    oppdc::testing::Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        const auto [g, cg] = oppdc::testing::random_covered(rng, 2, 5, 0.5);
        const auto [h, ch] = oppdc::testing::random_covered(rng, 2, 5, 0.5);
        const PathCover r = product_cover(g, cg, h, ch);
        ASSERT_TRUE(valid(cartesian_product(g, h), r));
        // the path for (u, v) is P_u then Q^v, which meet at (u, v)
        std::multiset<std::size_t> want, got;
        for (VertexId u = 0; u < g.order(); ++u)
            for (VertexId v = 0; v < h.order(); ++v) want.insert(cg.ending_at(u).length() + ch.starting_at(v).length());
        for (const auto& p : r.paths()) got.insert(p.length());
        EXPECT_EQ(got, want);
    }
}

TEST(Glue, PairsOfExceptions) {
    const Composite k3k3 = glue_at_vertex(CoverSide::exceptional(complete_graph(3)), 0,
                                          CoverSide::exceptional(complete_graph(3)), 0);
    EXPECT_EQ(k3k3.graph.order(), 5u);
    EXPECT_EQ(k3k3.cover.size(), 5u);
    EXPECT_TRUE(valid(k3k3.graph, k3k3.cover));

    for (auto [a, b] : {std::pair{3u, 5u}, std::pair{5u, 3u}, std::pair{5u, 5u}}) {
        const Composite c = glue_at_vertex(CoverSide::exceptional(complete_graph(a)), 1,
                                           CoverSide::exceptional(complete_graph(b)), 2);
        EXPECT_EQ(c.graph.order(), a + b - 1);
        EXPECT_TRUE(valid(c.graph, c.cover)) << a << "+" << b;
    }
}

TEST(Glue, ExceptionBesideCoveredSide) {
    const Composite k5c4 =
        glue_at_vertex(CoverSide::exceptional(complete_graph(5)), 0, covered(cycle_graph(4), cycle_cover(4)), 0);
    EXPECT_EQ(k5c4.graph.order(), 8u);
    EXPECT_TRUE(valid(k5c4.graph, k5c4.cover));

    const Composite c4k3 =
        glue_at_vertex(covered(cycle_graph(4), cycle_cover(4)), 2, CoverSide::exceptional(complete_graph(3)), 1);
    EXPECT_EQ(c4k3.graph.order(), 6u);
    EXPECT_TRUE(valid(c4k3.graph, c4k3.cover));
}

TEST(Glue, TwoCoveredSidesMerge) {
    const Composite c = glue_at_vertex(covered(cycle_graph(4), cycle_cover(4)), 0,
                                       covered(cycle_graph(4), cycle_cover(4)), 3);
    EXPECT_EQ(c.graph.order(), 7u);
    EXPECT_EQ(c.cover.size(), 7u);
    EXPECT_TRUE(valid(c.graph, c.cover));
    EXPECT_EQ(c.second_map[3], 0u);
}

TEST(Glue, Errors) {
    EXPECT_THROW(glue_at_vertex(covered(Graph(1), PathCover{DiPath{0}}), 0,
                                CoverSide::exceptional(complete_graph(3)), 0),
                 NonExistenceError);
    EXPECT_THROW(glue_at_vertex(covered(cycle_graph(4), cycle_cover(4)), 9,
                                covered(cycle_graph(4), cycle_cover(4)), 0),
                 InputError);
}

TEST(Bridge, TwoFourCycles) {
    const Composite c = bridge2_compose(covered(cycle_graph(4), cycle_cover(4)), 0, 2,
                                        covered(cycle_graph(4), cycle_cover(4)), 1, 3);
    EXPECT_EQ(c.graph.order(), 8u);
    EXPECT_EQ(c.graph.size(), 10u);
    EXPECT_EQ(c.cover.size(), 8u);
    EXPECT_TRUE(valid(c.graph, c.cover));
}

TEST(Bridge, CompleteFiveSides) {
    const Composite both = bridge2_compose(CoverSide::exceptional(complete_graph(5)), 0, 1,
                                           CoverSide::exceptional(complete_graph(5)), 0, 1);
    EXPECT_EQ(both.cover.size(), 10u);
    EXPECT_TRUE(valid(both.graph, both.cover));

    const Composite one = bridge2_compose(CoverSide::exceptional(complete_graph(5)), 2, 4,
                                          covered(cycle_graph(5), cycle_cover(5)), 0, 2);
    EXPECT_EQ(one.graph.order(), 10u);
    EXPECT_TRUE(valid(one.graph, one.cover));

    const Composite other = bridge2_compose(covered(cycle_graph(5), cycle_cover(5)), 1, 3,
                                            CoverSide::exceptional(complete_graph(5)), 0, 4);
    EXPECT_TRUE(valid(other.graph, other.cover));
}

TEST(Bridge, Errors) {
    EXPECT_THROW(bridge2_compose(covered(cycle_graph(4), cycle_cover(4)), 0, 0,
                                 covered(cycle_graph(4), cycle_cover(4)), 1, 2),
                 DomainError);
    EXPECT_THROW(bridge2_compose(CoverSide::exceptional(complete_graph(3)), 0, 1,
                                 covered(cycle_graph(4), cycle_cover(4)), 1, 2),
                 DomainError);
}

TEST(LowDegree, Pendant) {
    const Extension e = add_vertex_low_degree(complete_graph(2), PathCover{DiPath{0, 1}, DiPath{1, 0}}, {0});
    EXPECT_EQ(e.graph, Graph(3, {{0, 1}, {0, 2}}));
    EXPECT_EQ(e.added, 2u);
    EXPECT_TRUE(valid(e.graph, e.cover));
}

TEST(LowDegree, DegreeTwoOnAdjacentRimVertices) {
    const Extension e = add_vertex_low_degree(cycle_graph(4), cycle_cover(4), {0, 1});
    EXPECT_EQ(e.graph.order(), 5u);
    EXPECT_TRUE(valid(e.graph, e.cover));
}

TEST(LowDegree, TriangleIsRefused) {
    EXPECT_THROW(add_vertex_low_degree(complete_graph(2), PathCover{DiPath{0, 1}, DiPath{1, 0}}, {0, 1}),
                 NonExistenceError);
    EXPECT_THROW(add_vertex_low_degree(cycle_graph(4), cycle_cover(4), {0, 0}), InputError);
}

TEST(Subdivide, FourCycleAndFixture) {
    const Graph c4 = cycle_graph(4);
    for (const Edge& e : c4.edges()) {
        const Extension s = subdivide_edge(cycle_graph(4), cycle_cover(4), e.u, e.v);
        EXPECT_EQ(s.cover.size(), 5u);
        EXPECT_TRUE(valid(s.graph, s.cover));
    }
    const Fixture f = paper_fixture(FixtureName::k5_minus_edge);
    const Extension s = subdivide_edge(f.graph, f.cover, 2, 3);  // w x
    EXPECT_EQ(s.graph.order(), 6u);
    EXPECT_TRUE(valid(s.graph, s.cover));
    const Extension twice = subdivide_edge(s.graph, s.cover, 2, s.added);
    EXPECT_TRUE(valid(twice.graph, twice.cover));
    EXPECT_THROW(subdivide_edge(cycle_graph(4), cycle_cover(4), 0, 2), InputError);
}

TEST(Ear, Attach) {
    const EarExtension two = attach_ear(cycle_graph(4), cycle_cover(4), 0, 2, 2);
    EXPECT_EQ(two.graph.order(), 5u);
    EXPECT_TRUE(valid(two.graph, two.cover));
    const EarExtension three = attach_ear(cycle_graph(5), cycle_cover(5), 0, 2, 3);
    EXPECT_EQ(three.graph.order(), 7u);
    EXPECT_TRUE(valid(three.graph, three.cover));
    EXPECT_THROW(attach_ear(cycle_graph(4), cycle_cover(4), 0, 2, 1), DomainError);
}

TEST(Ear, Cover) {
    const Graph theta = with_edges(cycle_graph(6), std::vector<Edge>{{0, 6}, {3, 6}}, 7);
    const EarDecomposition d{{0, 1, 2, 3, 4, 5}, {{0, 6, 3}}};
    EXPECT_TRUE(valid(theta, ear_cover(theta, d)));
    EXPECT_EQ(ear_cover(cycle_graph(7), EarDecomposition{{0, 1, 2, 3, 4, 5, 6}, {}}), cycle_cover(7));
    EXPECT_THROW(ear_cover(complete_graph(3), EarDecomposition{{0, 1, 2}, {}}), DomainError);
}

TEST(AttachCycle, OneSharedVertex) {
    const Extension e = attach_cycle(cycle_graph(4), cycle_cover(4), {0, 4, 5, 6, 7});
    EXPECT_EQ(e.graph.order(), 8u);
    EXPECT_TRUE(valid(e.graph, e.cover));
}

TEST(AttachCycle, AlternatingFourCycle) {
    // C4 = [v1 v2 v3 v4] with v1 = 0 and v3 = 2 shared
    const Extension e = attach_cycle(cycle_graph(4), cycle_cover(4), {0, 4, 2, 5});
    EXPECT_EQ(e.graph.order(), 6u);
    EXPECT_TRUE(valid(e.graph, e.cover));
}

TEST(AttachCycle, TwoSharedAfterFourFresh) {
    const Extension e = attach_cycle(cycle_graph(4), cycle_cover(4), {4, 5, 6, 7, 0, 2});
    EXPECT_TRUE(valid(e.graph, e.cover));
}

TEST(AttachCycle, Errors) {
    EXPECT_TRUE(valid(attach_cycle(cycle_graph(4), cycle_cover(4), {0, 4, 5}).graph, attach_cycle(cycle_graph(4), cycle_cover(4), {0, 4, 5}).cover));
    EXPECT_THROW(attach_cycle(cycle_graph(4), cycle_cover(4), {0, 4}), DomainError);
    EXPECT_THROW(attach_cycle(cycle_graph(4), cycle_cover(4), {0, 1, 4, 5}), DomainError);
    EXPECT_THROW(attach_cycle(cycle_graph(4), cycle_cover(4), {0, 4, 2, 1}), DomainError);
}

TEST(CyclePartitionCover, Examples) {
    EXPECT_EQ(cycle_partition_cover(cycle_graph(4), CycleDecomposition{{{0, 1, 2, 3}}}), cycle_cover(4));
    const Graph bowtie(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
    const PathCover c = cycle_partition_cover(bowtie, CycleDecomposition{{{0, 1, 2, 3}, {0, 4, 5, 6}}});
    EXPECT_TRUE(valid(bowtie, c));
    const Graph tri_c4(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}});
    EXPECT_THROW(cycle_partition_cover(tri_c4, CycleDecomposition{{{0, 1, 2}, {0, 3, 4, 5}}}), DomainError);
}

TEST(BlockGraph, Examples) {
    const Graph two(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    EXPECT_TRUE(valid(two, block_graph_cover(two)));

    std::vector<Edge> es;
    for (VertexId b = 0; b < 3; ++b) {
        const VertexId base = 1 + 3 * b;
        for (VertexId i = 0; i < 3; ++i) {
            es.emplace_back(0, base + i);
            for (VertexId j = i + 1; j < 3; ++j) es.emplace_back(base + i, base + j);
        }
    }
    const Graph star(10, es);
    EXPECT_TRUE(valid(star, block_graph_cover(star)));

    EXPECT_THROW(block_graph_cover(complete_graph(3)), NonExistenceError);
    EXPECT_THROW(block_graph_cover(complete_graph(5)), NonExistenceError);
    EXPECT_THROW(block_graph_cover(cycle_graph(4)), DomainError);
}

TEST(BlockGraph, TreesAndMixedCliques) {
    oppdc::testing::Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        // glue random cliques of order 2..6 at random existing vertices
        std::vector<Edge> es;
        std::size_t n = 1;
        const std::size_t blocks_wanted = oppdc::testing::uniform(rng, 1, 5);
        for (std::size_t b = 0; b < blocks_wanted; ++b) {
            const std::size_t k = oppdc::testing::uniform(rng, 2, 6);
            std::vector<VertexId> vs{static_cast<VertexId>(oppdc::testing::uniform(rng, 0, n - 1))};
            for (std::size_t i = 1; i < k; ++i) vs.push_back(static_cast<VertexId>(n++));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) es.emplace_back(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
        }
        const Graph g(n, es);
        if (is_known_exception(g)) continue;
        EXPECT_TRUE(valid(g, block_graph_cover(g))) << emit_graph6(g);
    }
}
