#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "parcut/contraction.hpp"
#include "parcut/edge_table.hpp"
#include "parcut/oracle.hpp"
#include "parcut/union_find.hpp"
#include "test_graphs.hpp"

namespace parcut {
namespace {

using testing::make_graph;

TEST(Contract, TriangleUnionAB) {
  Graph g = testing::clique(3);
  auto result = contract(g, {0, 0, 2}, 5);
  EXPECT_EQ(result.graph, make_graph(2, {{0, 1, 2}}));
  EXPECT_EQ(result.block_of, (std::vector<NodeID>{0, 0, 1}));
  EXPECT_EQ(result.lambda_hat, 2u);
}

TEST(Contract, PathUnionLowersBound) {
  Graph g = testing::path(3);
  auto result = contract(g, {0, 0, 2}, 2);
  EXPECT_EQ(result.graph, make_graph(2, {{0, 1, 1}}));
  EXPECT_EQ(result.lambda_hat, 1u);
  ASSERT_FALSE(result.witness.empty());
  EXPECT_EQ(cut_weight(g, result.witness), 1u);
  EXPECT_TRUE(result.witness == std::vector<NodeID>({0, 1}) || result.witness == std::vector<NodeID>{2});
}

TEST(Contract, IdentityPartitionKeepsGraph) {
  Graph g = testing::random_connected(30, 0.3, 9, 4);
  std::vector<NodeID> labels(30);
  for (NodeID v = 0; v < 30; ++v) labels[v] = v;
  auto result = contract(g, labels, kMaxWeight);
  EXPECT_EQ(result.graph, g);
  EXPECT_EQ(result.lambda_hat, min_degree_vertex(g).second);
  EXPECT_EQ(result.witness, std::vector<NodeID>{min_degree_vertex(g).first});
}

TEST(Contract, SingleBlockGivesOneVertex) {
  auto result = contract(testing::clique(4), {0, 0, 0, 0}, 3);
  EXPECT_EQ(result.graph.num_nodes(), 1u);
  EXPECT_EQ(result.graph.num_edges(), 0u);
  EXPECT_EQ(result.lambda_hat, 3u);
}

TEST(Contract, BlocksOrderedBySmallestVertex) {
  NodeID count = 0;
  EXPECT_EQ(renumber_blocks({3, 1, 3, 1}, &count), (std::vector<NodeID>{0, 1, 0, 1}));
  EXPECT_EQ(count, 2u);
  EXPECT_THROW(renumber_blocks({0, 9}), ContractViolation);
}

TEST(Contract, OverflowIsReported) {
  const EdgeWeight half = kMaxWeight / 2 + 1;
  Graph g = make_graph(4, {{0, 2, half}, {1, 3, half}, {2, 3, 1}});
  EXPECT_THROW(contract(g, {0, 0, 2, 2}, 1), WeightOverflow);
}

TEST(HeavyPair, SumsConnectingEdges) {
  // Blocks {0,1,2} and {3,4,5}, crossing weights 2, 3, 5.
  Graph g = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 5, 1}, {0, 3, 2}, {1, 4, 3}, {2, 5, 5}});
  std::vector<NodeID> block_of{0, 0, 0, 1, 1, 1};
  for (std::size_t workers : {1u, 2u, 4u}) EXPECT_EQ(heavy_pair_accumulate(g, block_of, 0, 1, workers), 10u);
  EXPECT_THROW(heavy_pair_accumulate(g, block_of, 1, 1), ContractViolation);
}

TEST(HeavyPair, NoConnectingEdges) {
  // Two heavy blocks that only touch a third block.
  const NodeID n = 40;
  std::vector<WeightedEdge> edges;
  std::vector<NodeID> labels(n);
  for (NodeID v = 0; v < n; ++v) labels[v] = v < 19 ? 0 : (v < 38 ? 19 : 38);
  for (NodeID v = 1; v < 19; ++v) edges.push_back({0, v, 1});
  for (NodeID v = 20; v < 38; ++v) edges.push_back({19, v, 1});
  edges.push_back({0, 38, 4});
  edges.push_back({19, 39, 6});
  edges.push_back({38, 39, 1});
  Graph g = Graph::from_edges(n, edges);
  auto result = contract(g, labels, kMaxWeight, {.workers = 2, .heavy_divisor = 16});
  ASSERT_TRUE(result.heavy_pair);
  EXPECT_EQ(heavy_pair_accumulate(g, result.block_of, 0, 1), 0u);
  EXPECT_EQ(result.graph.edge_weight(0, 1), 0u);
  EXPECT_EQ(result.graph.num_edges(), 2u);
}

std::vector<NodeID> random_partition(NodeID n, NodeID blocks, std::mt19937_64& rng) {
  std::vector<NodeID> labels(n);
  std::uniform_int_distribution<NodeID> pick(0, std::min(blocks, n) - 1);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

TEST(HeavyPair, MatchesTableAggregation) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const NodeID n = 2 + seed * 4 % 255;
    Graph g = testing::random_connected(n, 0.1, 12, seed);
    const NodeID blocks = 1 + seed % 5;
    auto labels = random_partition(n, blocks, rng);
    auto with = contract(g, labels, kMaxWeight, {.workers = 3, .heavy_divisor = 16});
    auto without = contract(g, labels, kMaxWeight, {.workers = 3, .heavy_divisor = 0});
    EXPECT_FALSE(without.heavy_pair);
    ASSERT_EQ(with.graph, without.graph);
    if (with.heavy_pair) {
      auto [a, b] = *with.heavy_pair;
      ConcurrentEdgeTable table(g.num_edges());
      for (const auto& e : g.edge_list()) {
        if (with.block_of[e.u] != with.block_of[e.v]) table.add(with.block_of[e.u], with.block_of[e.v], e.weight);
      }
      EdgeWeight expected = 0;
      for (const auto& e : table.entries()) {
        if (ConcurrentEdgeTable::key_of(e.u, e.v) == ConcurrentEdgeTable::key_of(a, b)) expected = e.weight;
      }
      EXPECT_EQ(heavy_pair_accumulate(g, with.block_of, a, b, 4), expected);
    }
  }
}

TEST(Contract, InvariantsOnRandomPartitions) {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const NodeID n = 2 + seed % 80;
    Graph g = testing::random_connected(n, 0.2, 9, seed);
    auto labels = random_partition(n, 1 + seed % 12, rng);
    NodeID blocks = 0;
    renumber_blocks(labels, &blocks);
    auto result = contract(g, labels, kMaxWeight);
    ASSERT_EQ(result.graph.num_nodes(), blocks);
    std::vector<std::vector<EdgeWeight>> expected(blocks, std::vector<EdgeWeight>(blocks, 0));
    for (const auto& e : g.edge_list()) {
      const NodeID a = result.block_of[e.u], b = result.block_of[e.v];
      if (a != b) expected[a][b] = expected[b][a] = expected[a][b] + e.weight;
    }
    for (NodeID a = 0; a < blocks; ++a) {
      EXPECT_EQ(result.graph.edge_weight(a, a), 0u);
      for (NodeID b = 0; b < blocks; ++b) {
        if (a != b) ASSERT_EQ(result.graph.edge_weight(a, b), expected[a][b]);
      }
    }
    if (blocks >= 2) {
      ASSERT_EQ(result.lambda_hat, min_degree_vertex(result.graph).second);
      ASSERT_EQ(cut_weight(g, result.witness), result.lambda_hat);
    }
  }
}

TEST(Contract, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const NodeID n = 50 + seed * 13;
    Graph g = testing::random_connected(n, 0.05, 20, seed);
    auto labels = random_partition(n, 2 + seed % 40, rng);
    auto reference = contract(g, labels, kMaxWeight, {.workers = 1});
    for (std::size_t workers : {2u, 4u, 8u}) {
      auto other = contract(g, labels, kMaxWeight, {.workers = workers});
      ASSERT_EQ(other.graph, reference.graph);
      ASSERT_EQ(other.block_of, reference.block_of);
      ASSERT_EQ(other.lambda_hat, reference.lambda_hat);
      ASSERT_EQ(other.witness, reference.witness);
    }
  }
}

// Contract a random subset of edges whose endpoints have connectivity at
// least lambda_hat; every lighter cut must survive with its weight.
TEST(Contract, PreservesLightCuts) {
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const NodeID n = 3 + seed % 14;
    Graph g = testing::random_connected(n, 0.3, 6, 300 + seed);
    const EdgeWeight lambda = oracle_global_mincut(g).value;
    const EdgeWeight lambda_hat = lambda + seed % 3;
    UnionFind uf(n);
    for (const auto& e : g.edge_list()) {
      if (rng() % 2 == 0 && oracle_connectivity(g, e.u, e.v) >= lambda_hat) uf.unite(e.u, e.v);
    }
    auto result = contract(g, uf.canonical_labels(), lambda_hat);
    for (const auto& cut : enumerate_cuts_below(g, lambda_hat)) {
      std::vector<bool> side(result.graph.num_nodes(), false);
      for (NodeID v = 0; v < n; ++v) {
        const bool in = (cut.mask >> v) & 1U;
        if (in) side[result.block_of[v]] = true;
      }
      for (NodeID v = 0; v < n; ++v) ASSERT_EQ(side[result.block_of[v]], ((cut.mask >> v) & 1U) != 0);
      ASSERT_EQ(cut_weight(result.graph, side), cut.weight);
    }
    EdgeWeight value = result.lambda_hat;
    if (result.graph.num_nodes() >= 2) value = std::min(value, oracle_global_mincut(result.graph).value);
    ASSERT_EQ(value, lambda);
  }
}

TEST(EdgeTable, ConcurrentAddsSum) {
  ConcurrentEdgeTable table(100);
  std::vector<std::jthread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (NodeID i = 0; i < 100; ++i) table.add(i, i + 1, 1);
    });
  }
  threads.clear();
  auto entries = table.entries();
  ASSERT_EQ(entries.size(), 100u);
  for (const auto& e : entries) {
    EXPECT_EQ(e.v, e.u + 1);
    EXPECT_EQ(e.weight, 4u);
  }
}

}  // namespace
}  // namespace parcut
