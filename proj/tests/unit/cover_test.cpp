#include <gtest/gtest.h>

#include "oppdc/oppdc.hpp"
#include "support/graphs.hpp"

using namespace oppdc;

namespace {

const Fixture& two_triangles() {
    static const Fixture f = paper_fixture(FixtureName::k3k3_cut_vertex);
    return f;
}

bool has_kind(const VerifyReport& r, ViolationKind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

}  // namespace

TEST(DiPath, Basics) {
    const DiPath p{3, 1, 2};
    EXPECT_EQ(p.length(), 2u);
    EXPECT_TRUE(p.is_simple());
    EXPECT_FALSE((DiPath{1, 2, 1}).is_simple());
    EXPECT_EQ(p.reversed(), (DiPath{2, 1, 3}));
    EXPECT_EQ(join(DiPath{0, 1}, DiPath{1, 2}), (DiPath{0, 1, 2}));
    EXPECT_THROW(join(DiPath{0, 1}, DiPath{2, 3}), InputError);
}

TEST(PathCover, Indexes) {
    const PathCover c{DiPath{0, 1}, DiPath{1, 0}};
    EXPECT_EQ(c.starting_at(1), (DiPath{1, 0}));
    EXPECT_EQ(c.ending_at(1), (DiPath{0, 1}));
    EXPECT_EQ(c.total_length(), 2u);
}

TEST(Verify, TwoTrianglesFromTheBlockFixture) {
    const auto& f = two_triangles();
    EXPECT_EQ(f.labels, (std::vector<std::string>{"u", "v", "w", "x", "y"}));
    EXPECT_TRUE(verify_oppdc(f.graph, f.cover).valid);
}

TEST(Verify, IsolatedVertex) {
    EXPECT_TRUE(verify_oppdc(Graph(1), PathCover{DiPath{0}}).valid);
    EXPECT_TRUE(verify_oppdc(Graph(0), PathCover{}).valid);
}

TEST(Verify, RotatedTrianglesDuplicateAndMiss) {
    const VerifyReport r = verify_oppdc(complete_graph(3), PathCover{DiPath{0, 1, 2}, DiPath{1, 2, 0}, DiPath{2, 0, 1}});
    ASSERT_FALSE(r.valid);
    // 0->1, 1->2, 2->0 twice each; the reverse arcs never
    EXPECT_EQ(r.violations.size(), 6u);
    EXPECT_EQ(r.violations.front().kind, ViolationKind::arc_missing);
    EXPECT_EQ(r.violations.front().arc, (Arc{0, 2}));
    EXPECT_TRUE(has_kind(r, ViolationKind::arc_duplicated));
    EXPECT_FALSE(has_kind(r, ViolationKind::begin_count));
}

TEST(Verify, EachClause) {
    const Graph k2 = complete_graph(2);
    EXPECT_TRUE(has_kind(verify_oppdc(k2, PathCover{DiPath{0, 1}, DiPath{0, 1}}), ViolationKind::begin_count));
    EXPECT_TRUE(has_kind(verify_oppdc(k2, PathCover{DiPath{0, 1}, DiPath{0, 1}}), ViolationKind::end_count));
    EXPECT_TRUE(has_kind(verify_oppdc(path_graph(3), PathCover{DiPath{0, 2}}), ViolationKind::non_edge_arc));
    EXPECT_TRUE(has_kind(verify_oppdc(complete_graph(3), PathCover{DiPath{0, 1, 2, 0}}), ViolationKind::non_simple_path));

    const PathCover with_point{DiPath{0, 1}, DiPath{1, 0}, DiPath{1}};
    EXPECT_FALSE(verify_oppdc(k2, PathCover{DiPath{0}, DiPath{1}}).valid);
    const VerifyReport strict = verify_oppdc(k2, PathCover{DiPath{0}, DiPath{1}, DiPath{0, 1}, DiPath{1, 0}});
    EXPECT_TRUE(has_kind(strict, ViolationKind::zero_length_at_non_isolated));
    const VerifyReport lenient = verify_oppdc(k2, PathCover{DiPath{0}, DiPath{1}, DiPath{0, 1}, DiPath{1, 0}}, false);
    EXPECT_FALSE(has_kind(lenient, ViolationKind::zero_length_at_non_isolated));
}

TEST(Verify, ForeignVertexIsAnInputError) {
    EXPECT_THROW(verify_oppdc(complete_graph(2), PathCover{DiPath{0, 5}}), InputError);
}

TEST(Verify, ReversalClosureAndCounts) {
    oppdc::testing::Rng rng(29);
    for (int t = 0; t < 60; ++t) {
        const auto [g, c] = oppdc::testing::random_covered(rng, 2, 9, 0.4);
        ASSERT_TRUE(verify_oppdc(g, c).valid);
        EXPECT_EQ(c.size(), g.order());
        EXPECT_EQ(c.total_length(), 2 * g.size());
        EXPECT_TRUE(verify_oppdc(g, c.reversed()).valid);
    }
}

TEST(Socdc, Examples) {
    EXPECT_TRUE(verify_socdc(Graph(0), {}, 0).valid);
    EXPECT_TRUE(verify_socdc(complete_graph(3), {{0, 1, 2}, {2, 1, 0}}, 2).valid);
    EXPECT_FALSE(verify_socdc(complete_graph(3), {{0, 1, 2}, {2, 1, 0}}, 1).valid);
    // four directed triangles; no split into three cycles exists
    const CycleCover k4{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    EXPECT_TRUE(verify_socdc(complete_graph(4), k4, 4).valid);
    const VerifyReport capped = verify_socdc(complete_graph(4), k4, 3);
    ASSERT_FALSE(capped.valid);
    EXPECT_TRUE(has_kind(capped, ViolationKind::too_many_cycles));
    EXPECT_FALSE(verify_socdc(complete_graph(2), {{0, 1}}, 1).valid);
}

TEST(Socdc, TwoVertexConversion) {
    const ApexCycleCover a = oppdc_to_socdc(complete_graph(2), PathCover{DiPath{0, 1}, DiPath{1, 0}});
    EXPECT_EQ(a.apex_graph, complete_graph(3));
    EXPECT_EQ(a.apex, 2u);
    EXPECT_EQ(a.cycles, (CycleCover{{2, 0, 1}, {2, 1, 0}}));
    EXPECT_TRUE(verify_socdc(a.apex_graph, a.cycles, 2).valid);
    EXPECT_EQ(socdc_to_oppdc(a.apex_graph, a.apex, a.cycles), (PathCover{DiPath{0, 1}, DiPath{1, 0}}));
}

TEST(Socdc, FourCycleGivesWheel) {
    const Graph c4 = cycle_graph(4);
    const ApexCycleCover a = oppdc_to_socdc(c4, cycle_cover(4));
    EXPECT_EQ(a.apex_graph.size(), 8u);
    EXPECT_EQ(a.cycles.size(), 4u);
    EXPECT_TRUE(verify_socdc(a.apex_graph, a.cycles, 4).valid);
    EXPECT_EQ(socdc_to_oppdc(a.apex_graph, a.apex, a.cycles), cycle_cover(4));
}

TEST(Socdc, RejectsBadInputs) {
    EXPECT_THROW(oppdc_to_socdc(Graph(1), PathCover{DiPath{0}}), DomainError);
    EXPECT_THROW(oppdc_to_socdc(complete_graph(2), PathCover{DiPath{0, 1}}), DomainError);
    // apex 3 over a triangle; the two triangles of 0 1 2 avoid the apex
    EXPECT_THROW(socdc_to_oppdc(complete_graph(4), 3, {{0, 1, 2}, {2, 1, 0}, {3, 0, 1}}), DomainError);
    EXPECT_THROW(socdc_to_oppdc(cycle_graph(4), 0, {}), DomainError);
}

TEST(Socdc, RoundTripProperty) {
    oppdc::testing::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const auto [g, c] = oppdc::testing::random_covered(rng, 2, 9, 0.4);
        const ApexCycleCover a = oppdc_to_socdc(g, c);
        EXPECT_EQ(a.cycles.size(), g.order());
        EXPECT_TRUE(verify_socdc(a.apex_graph, a.cycles, a.apex_graph.order() - 1).valid);
        EXPECT_EQ(socdc_to_oppdc(a.apex_graph, a.apex, a.cycles), c);
    }
}

TEST(CoverText, ParseAndEmit) {
    EXPECT_EQ(parse_cover("paths 2\n0 1\n1 0"), (PathCover{DiPath{0, 1}, DiPath{1, 0}}));
    const std::string text = "paths 3\n0 1 2\n2 1\n1 0\n";
    EXPECT_EQ(emit_cover(parse_cover(text)), text);
    EXPECT_THROW(parse_cover("paths 1\n0 1 0"), ParseError);
    EXPECT_THROW(parse_cover("paths 2\n0 1\n0 2"), ParseError);
    EXPECT_THROW(parse_cover("paths 2\n0 1"), ParseError);
    EXPECT_THROW(parse_cover("0 1"), ParseError);
    EXPECT_EQ(parse_cycles(emit_cycles({{0, 1, 2}, {2, 1, 0}})), (CycleCover{{0, 1, 2}, {2, 1, 0}}));
}
