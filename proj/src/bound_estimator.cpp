#include "parcut/bound_estimator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "parcut/contraction.hpp"
#include "parcut/mincut.hpp"

namespace parcut {

std::string_view to_string(BoundMethod method) {
  return method == BoundMethod::kMinDegree ? "mindeg" : "lp";
}

BoundMethod parse_bound_method(std::string_view name) {
  if (name == "mindeg") return BoundMethod::kMinDegree;
  if (name == "lp") return BoundMethod::kLabelPropagation;
  throw InputError("unknown bound method '" + std::string(name) + "' (expected mindeg or lp)");
}

BoundResult min_degree_bound(const Graph& graph) {
  if (graph.num_nodes() < 2) throw InputError("a cut bound needs at least two vertices");
  auto [v, degree] = min_degree_vertex(graph);
  return {degree, {v}, BoundMethod::kMinDegree};
}

std::vector<NodeID> label_propagation(const Graph& graph, std::size_t iterations, std::uint64_t seed) {
  const NodeID n = graph.num_nodes();
  std::vector<NodeID> label(n);
  std::iota(label.begin(), label.end(), NodeID{0});
  std::vector<NodeID> order(label);
  std::vector<EdgeWeight> weight_of(n, 0);
  std::vector<NodeID> touched;
  std::mt19937_64 rng(seed);

  for (std::size_t it = 0; it < iterations; ++it) {
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeID v : order) {
      if (graph.degree(v) == 0) continue;
      touched.clear();
      for (const auto& arc : graph.neighbors(v)) {
        const NodeID l = label[arc.target];
        if (weight_of[l] == 0) touched.push_back(l);
        weight_of[l] += arc.weight;
      }
      NodeID best = touched.front();
      for (NodeID l : touched) {
        if (weight_of[l] > weight_of[best] || (weight_of[l] == weight_of[best] && l < best)) best = l;
      }
      for (NodeID l : touched) weight_of[l] = 0;
      label[v] = best;
    }
  }
  return label;
}

BoundResult inexact_bound(const Graph& graph, const LabelPropagationConfig& config) {
  BoundResult best = min_degree_bound(graph);
  best.method = BoundMethod::kLabelPropagation;

  // members[v]: original vertices inside vertex v of the current level.
  std::vector<std::vector<NodeID>> members(graph.num_nodes());
  for (NodeID v = 0; v < graph.num_nodes(); ++v) members[v] = {v};

  Graph level_graph;
  const Graph* current = &graph;
  std::uint64_t level = 0;
  while (current->num_nodes() > config.threshold) {
    auto labels = label_propagation(*current, config.iterations, config.seed + level);
    auto contracted = contract(*current, labels, best.value, {config.workers, 16});
    const NodeID blocks = contracted.graph.num_nodes();
    // No progress, or everything merged into one cluster: solve this level exactly.
    if (blocks == current->num_nodes() || blocks < 2) break;

    std::vector<std::vector<NodeID>> next(blocks);
    for (NodeID v = 0; v < current->num_nodes(); ++v) {
      auto& into = next[contracted.block_of[v]];
      into.insert(into.end(), members[v].begin(), members[v].end());
    }
    members = std::move(next);
    auto [v, degree] = min_degree_vertex(contracted.graph);
    if (degree < best.value) {
      best.value = degree;
      best.witness = members[v];
    }
    level_graph = std::move(contracted.graph);
    current = &level_graph;
    ++level;
  }

  if (current->num_nodes() >= 2) {
    DriverConfig exact;
    exact.queue = config.queue;
    exact.workers = 1;
    exact.seed = config.seed;
    exact.bound = BoundMethod::kMinDegree;
    exact.emit_partition = true;
    auto cut = exact_mincut(*current, exact);
    if (cut.value < best.value) {
      best.value = cut.value;
      best.witness.clear();
      for (NodeID v : cut.partition) best.witness.insert(best.witness.end(), members[v].begin(), members[v].end());
    }
  }
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

}  // namespace parcut
