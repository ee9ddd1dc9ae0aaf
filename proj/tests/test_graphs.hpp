#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "parcut/graph.hpp"

namespace parcut::testing {

inline Graph make_graph(NodeID n, std::vector<WeightedEdge> edges) { return Graph::from_edges(n, edges); }

inline Graph path(NodeID n, EdgeWeight w = 1) {
  std::vector<WeightedEdge> edges;
  for (NodeID v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, w});
  return make_graph(n, edges);
}

inline Graph cycle(NodeID n, EdgeWeight w = 1) {
  std::vector<WeightedEdge> edges;
  for (NodeID v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, w});
  return make_graph(n, edges);
}

inline Graph clique(NodeID n, EdgeWeight w = 1) {
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  }
  return make_graph(n, edges);
}

inline Graph star(NodeID leaves) {
  std::vector<WeightedEdge> edges;
  for (NodeID v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  return make_graph(leaves + 1, edges);
}

// Two K4 on {0..3} and {4..7} joined by the unit edge (3,4).
inline Graph two_k4_bridge() {
  std::vector<WeightedEdge> edges;
  for (NodeID base : {0u, 4u}) {
    for (NodeID u = 0; u < 4; ++u) {
      for (NodeID v = u + 1; v < 4; ++v) edges.push_back({base + u, base + v, 1});
    }
  }
  edges.push_back({3, 4, 1});
  return make_graph(8, edges);
}

// Triangles {0,1,2} and {3,4,5} joined by the unit edge (2,3).
inline Graph bowtie() {
  return make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
}

// Triangle with weights ab=3, bc=1, ac=1 (a=0, b=1, c=2).
inline Graph weighted_triangle() { return make_graph(3, {{0, 1, 3}, {1, 2, 1}, {0, 2, 1}}); }

inline EdgeWeight random_weight(std::mt19937_64& rng, EdgeWeight max_weight) {
  return std::uniform_int_distribution<EdgeWeight>(1, max_weight)(rng);
}

// G(n, p) with a random spanning tree added so the result is connected.
inline Graph random_connected(NodeID n, double p, EdgeWeight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<WeightedEdge> edges;
  for (NodeID v = 1; v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<NodeID>(0, v - 1)(rng), v, random_weight(rng, max_weight)});
  }
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, random_weight(rng, max_weight)});
    }
  }
  return make_graph(n, edges);
}

inline Graph random_tree(NodeID n, EdgeWeight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedEdge> edges;
  for (NodeID v = 1; v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<NodeID>(0, v - 1)(rng), v, random_weight(rng, max_weight)});
  }
  return make_graph(n, edges);
}

inline Graph random_cycle(NodeID n, EdgeWeight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeID> order(n);
  for (NodeID v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<WeightedEdge> edges;
  for (NodeID i = 0; i < n; ++i) edges.push_back({order[i], order[(i + 1) % n], random_weight(rng, max_weight)});
  return make_graph(n, edges);
}

// Several dense random clusters, consecutive ones joined by a few light edges.
inline Graph random_clique_bridges(NodeID clusters, NodeID cluster_size, EdgeWeight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedEdge> edges;
  const NodeID n = clusters * cluster_size;
  for (NodeID c = 0; c < clusters; ++c) {
    const NodeID base = c * cluster_size;
    for (NodeID u = 0; u < cluster_size; ++u) {
      for (NodeID v = u + 1; v < cluster_size; ++v) edges.push_back({base + u, base + v, random_weight(rng, max_weight)});
    }
    if (c + 1 < clusters) {
      const NodeID bridges = std::uniform_int_distribution<NodeID>(1, 2)(rng);
      for (NodeID b = 0; b < bridges; ++b) {
        NodeID u = base + std::uniform_int_distribution<NodeID>(0, cluster_size - 1)(rng);
        NodeID v = base + cluster_size + std::uniform_int_distribution<NodeID>(0, cluster_size - 1)(rng);
        edges.push_back({u, v, random_weight(rng, max_weight)});
      }
    }
  }
  return make_graph(n, edges);
}

// Disjoint union of two random connected graphs, vertex ids interleaved.
inline Graph random_disconnected(NodeID n, EdgeWeight max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const NodeID left = std::uniform_int_distribution<NodeID>(1, n - 1)(rng);
  Graph a = random_connected(left, 0.3, max_weight, seed * 2 + 1);
  Graph b = random_connected(n - left, 0.3, max_weight, seed * 2 + 2);
  std::vector<NodeID> perm(n);
  for (NodeID v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<WeightedEdge> edges;
  for (const auto& e : a.edge_list()) edges.push_back({perm[e.u], perm[e.v], e.weight});
  for (const auto& e : b.edge_list()) edges.push_back({perm[left + e.u], perm[left + e.v], e.weight});
  return make_graph(n, edges);
}

// Cut weight of a side given as a sorted or unsorted id list.
inline EdgeWeight side_weight(const Graph& g, const std::vector<NodeID>& side) { return cut_weight(g, side); }

}  // namespace parcut::testing
