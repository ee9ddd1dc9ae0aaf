#include <gtest/gtest.h>

#include "parcut/oracle.hpp"
#include "test_graphs.hpp"

namespace parcut {
namespace {

TEST(OracleGlobalMincut, Examples) {
  EXPECT_EQ(oracle_global_mincut(testing::cycle(5)).value, 2u);
  EXPECT_EQ(oracle_global_mincut(testing::clique(5)).value, 4u);
  auto bridge = oracle_global_mincut(testing::two_k4_bridge());
  EXPECT_EQ(bridge.value, 1u);
  EXPECT_EQ(cut_weight(testing::two_k4_bridge(), bridge.side), 1u);
  EXPECT_EQ(bridge.side.size(), 4u);
}

TEST(OracleGlobalMincut, DisconnectedIsZero) {
  Graph g = testing::make_graph(4, {{0, 1, 3}, {2, 3, 1}});
  auto cut = oracle_global_mincut(g);
  EXPECT_EQ(cut.value, 0u);
  EXPECT_EQ(cut.side, (std::vector<NodeID>{0, 1}));
  EXPECT_THROW(oracle_global_mincut(testing::path(1)), InputError);
}

TEST(OracleConnectivity, Examples) {
  EXPECT_EQ(oracle_connectivity(testing::path(3), 0, 2), 1u);
  Graph k4 = testing::clique(4);
  for (NodeID s = 0; s < 4; ++s) {
    for (NodeID t = 0; t < 4; ++t) {
      if (s != t) EXPECT_EQ(oracle_connectivity(k4, s, t), 3u);
    }
  }
  EXPECT_EQ(oracle_connectivity(testing::weighted_triangle(), 0, 1), 4u);
  EXPECT_THROW(oracle_connectivity(k4, 1, 1), InputError);
}

TEST(OracleGlobalMincut, AgreesWithExhaustiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const NodeID n = 2 + seed % 9;
    Graph g = testing::random_connected(n, 0.35, 1 + seed % 7, seed);
    auto sw = oracle_global_mincut(g);
    auto brute = enumerate_mincut(g);
    ASSERT_EQ(sw.value, brute.value) << "seed " << seed;
    EXPECT_EQ(cut_weight(g, sw.side), sw.value);
    EXPECT_EQ(cut_weight(g, brute.side), brute.value);
    EXPECT_GE(sw.side.size(), 1u);
    EXPECT_LT(sw.side.size(), n);
  }
}

TEST(OracleGlobalMincut, AgreesWithMinimumOverMaxFlows) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const NodeID n = 2 + seed % 15;
    Graph g = testing::random_connected(n, 0.25, 8, 1000 + seed);
    EdgeWeight best = kMaxWeight;
    for (NodeID t = 1; t < n; ++t) best = std::min(best, oracle_connectivity(g, 0, t));
    ASSERT_EQ(oracle_global_mincut(g).value, best) << "seed " << seed;
  }
}

TEST(EnumerateCutsBelow, ListsExactlyTheLightCuts) {
  Graph g = testing::path(4);
  // Three single-edge cuts of weight 1; every other proper cut is heavier.
  auto cuts = enumerate_cuts_below(g, 2);
  EXPECT_EQ(cuts.size(), 3u);
  for (const auto& c : cuts) EXPECT_EQ(c.weight, 1u);
  EXPECT_TRUE(enumerate_cuts_below(g, 1).empty());
}

}  // namespace
}  // namespace parcut
