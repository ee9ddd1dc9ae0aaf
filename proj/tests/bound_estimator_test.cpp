#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "parcut/bound_estimator.hpp"
#include "parcut/oracle.hpp"
#include "test_graphs.hpp"

namespace parcut {
namespace {

using testing::make_graph;

TEST(MinDegreeBound, Examples) {
  EXPECT_EQ(min_degree_bound(testing::cycle(5)).value, 2u);
  EXPECT_EQ(min_degree_bound(testing::cycle(5)).witness.size(), 1u);
  EXPECT_EQ(min_degree_bound(testing::clique(4)).value, 3u);
  auto triangle = min_degree_bound(testing::weighted_triangle());
  EXPECT_EQ(triangle.value, 2u);
  EXPECT_EQ(triangle.witness, std::vector<NodeID>{2});
  EXPECT_EQ(triangle.method, BoundMethod::kMinDegree);
  EXPECT_THROW(min_degree_bound(make_graph(1, {})), InputError);
}

TEST(LabelPropagation, SingleEdgeSharesLabel) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto labels = label_propagation(make_graph(2, {{0, 1, 1}}), 1, seed);
    EXPECT_EQ(labels[0], labels[1]);
  }
}

TEST(LabelPropagation, IsolatedVerticesKeepLabels) {
  auto labels = label_propagation(make_graph(4, {{0, 1, 1}}), 3, 0);
  EXPECT_EQ(labels[2], 2u);
  EXPECT_EQ(labels[3], 3u);
}

// With unit weights a bridge endpoint visited early can pull the other clique
// onto its label (ties go to the smallest label), so only the cliques staying
// whole is guaranteed.
TEST(LabelPropagation, TwoK4sNeverSplitAClique) {
  Graph g = testing::two_k4_bridge();
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    auto labels = label_propagation(g, 2, seed);
    std::set<NodeID> left(labels.begin(), labels.begin() + 4);
    std::set<NodeID> right(labels.begin() + 4, labels.end());
    ASSERT_EQ(left.size(), 1u) << "seed " << seed;
    ASSERT_EQ(right.size(), 1u) << "seed " << seed;
  }
}

TEST(LabelPropagation, HeavierK4sGiveTwoClusters) {
  Graph g = testing::two_k4_bridge();
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edge_list()) edges.push_back({e.u, e.v, e.u == 3 && e.v == 4 ? 1 : 2 * e.weight});
  Graph heavy = Graph::from_edges(8, edges);
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    auto labels = label_propagation(heavy, 2, seed);
    std::set<NodeID> left(labels.begin(), labels.begin() + 4);
    std::set<NodeID> right(labels.begin() + 4, labels.end());
    ASSERT_EQ(left.size(), 1u) << "seed " << seed;
    ASSERT_EQ(right.size(), 1u) << "seed " << seed;
    ASSERT_NE(*left.begin(), *right.begin()) << "seed " << seed;
  }
}

TEST(LabelPropagation, Deterministic) {
  Graph g = testing::random_connected(200, 0.05, 5, 1);
  EXPECT_EQ(label_propagation(g, 3, 7), label_propagation(g, 3, 7));
}

void expect_sound(const Graph& g, const BoundResult& bound) {
  ASSERT_FALSE(bound.witness.empty());
  ASSERT_LT(bound.witness.size(), g.num_nodes());
  ASSERT_EQ(cut_weight(g, bound.witness), bound.value);
  ASSERT_GE(bound.value, oracle_global_mincut(g).value);
}

TEST(InexactBound, TwoK4Bridge) {
  Graph g = testing::two_k4_bridge();
  for (NodeID threshold : {2u, 4u, 1024u}) {
    auto bound = inexact_bound(g, {.threshold = threshold});
    EXPECT_EQ(bound.value, 1u);
    auto side = bound.witness;
    std::sort(side.begin(), side.end());
    EXPECT_TRUE(side == std::vector<NodeID>({0, 1, 2, 3}) || side == std::vector<NodeID>({4, 5, 6, 7}));
    EXPECT_EQ(bound.method, BoundMethod::kLabelPropagation);
  }
}

TEST(InexactBound, SmallExamples) {
  for (NodeID threshold : {2u, 3u, 1024u}) {
    EXPECT_EQ(inexact_bound(testing::clique(5), {.threshold = threshold}).value, 4u);
    EXPECT_EQ(inexact_bound(testing::cycle(6), {.threshold = threshold}).value, 2u);
  }
}

TEST(InexactBound, SoundOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const NodeID n = 2 + seed % 90;
    Graph g = seed % 3 == 0 ? testing::random_clique_bridges(2 + seed % 5, 3 + seed % 6, 9, seed)
                            : testing::random_connected(n, 0.1, 9, seed);
    for (NodeID threshold : {2u, 8u, 1024u}) {
      expect_sound(g, inexact_bound(g, {.iterations = 1 + seed % 3, .threshold = threshold, .seed = seed}));
    }
  }
}

TEST(BoundMethod, ParseRoundTrip) {
  for (BoundMethod m : {BoundMethod::kMinDegree, BoundMethod::kLabelPropagation}) {
    EXPECT_EQ(parse_bound_method(to_string(m)), m);
  }
  EXPECT_THROW(parse_bound_method("exact"), InputError);
}

}  // namespace
}  // namespace parcut
