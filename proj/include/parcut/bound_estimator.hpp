#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/pqueue.hpp"

namespace parcut {

enum class BoundMethod { kMinDegree, kLabelPropagation };

std::string_view to_string(BoundMethod method);
// Accepts "mindeg" and "lp".
BoundMethod parse_bound_method(std::string_view name);

struct LabelPropagationConfig {
  std::size_t iterations = 3;
  // Levels stop once the contracted graph has at most this many vertices;
  // that graph is then solved exactly.
  NodeID threshold = 1024;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  QueueKind queue = QueueKind::kBQueue;
};

// An upper bound on the minimum cut together with a cut that realizes it.
struct BoundResult {
  EdgeWeight value = 0;
  std::vector<NodeID> witness;
  BoundMethod method = BoundMethod::kMinDegree;
};

// The trivial cut around a minimum weighted-degree vertex. Needs n >= 2.
BoundResult min_degree_bound(const Graph& graph);

// Labels start as vertex ids. In every iteration each vertex, visited in a
// seeded random order, takes the label of largest incident weight among its
// neighbors (smallest label on ties). Isolated vertices keep their label.
std::vector<NodeID> label_propagation(const Graph& graph, std::size_t iterations, std::uint64_t seed);

/*
 * Multilevel inexact bound: contract label-propagation clusters until the
 * graph is small, remembering the lightest collapsed vertex as a candidate
 * cut, then solve the remainder exactly. The result is the lightest cut
 * seen, so it is never below the minimum cut. Needs a connected graph, n >= 2.
 */
BoundResult inexact_bound(const Graph& graph, const LabelPropagationConfig& config = {});

}  // namespace parcut
