#include <gtest/gtest.h>

#include "oppdc/oppdc.hpp"
#include "support/graphs.hpp"

using namespace oppdc;

// Connected unlabelled graphs on 1..6 vertices: 1, 1, 2, 6, 21, 112.
TEST(Enumerate, ConnectedGraphCounts) {
    const std::vector<std::size_t> want{1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(oppdc::testing::connected_graphs(n).size(), want[n - 1]) << n;
    EXPECT_EQ(oppdc::testing::connected_graphs_up_to(6).size(), 143u);
}

TEST(Enumerate, DistinctAndConnected) {
    const auto gs = oppdc::testing::connected_graphs(5);
    std::set<std::string> codes;
    for (const auto& g : gs) {
        EXPECT_TRUE(is_connected(g));
        codes.insert(emit_graph6(g));
    }
    EXPECT_EQ(codes.size(), gs.size());
    EXPECT_EQ(codes.count("D~{"), 1u);
}
