#include "parcut/capforest.hpp"

#include <algorithm>
#include <random>

#include "parcut/union_find.hpp"

namespace parcut {

EdgeWeight queue_cap(const Graph& graph, EdgeWeight lambda_hat, CapMode mode) {
  if (mode == CapMode::kCapped) return lambda_hat;
  return std::max<EdgeWeight>(graph.max_weighted_degree(), 1);
}

NodeID random_start_vertex(NodeID n, std::uint64_t seed) {
  if (n == 0) throw ContractViolation("start vertex of an empty graph");
  std::mt19937_64 rng(seed);
  return std::uniform_int_distribution<NodeID>(0, n - 1)(rng);
}

namespace {

template <class Queue, class EdgeHook>
ScanResult scan(const Graph& graph, EdgeWeight lambda_hat, NodeID start, const ScanConfig& config,
                EdgeHook&& on_edge) {
  const NodeID n = graph.num_nodes();
  if (start >= n) throw ContractViolation("start vertex out of range");
  if (lambda_hat == 0) throw ContractViolation("capforest needs lambda_hat >= 1");

  const EdgeWeight cap = queue_cap(graph, lambda_hat, config.cap_mode);
  Queue queue(n, cap);
  std::vector<EdgeWeight> r(n, 0);
  std::vector<bool> visited(n, false);
  UnionFind uf(n);

  ScanResult result;
  EdgeWeight alpha = 0;
  NodeID scanned = 0;
  std::vector<NodeID> order;
  std::size_t best_prefix = 0;
  if (config.track_cut_side) order.reserve(n);

  queue.insert(start, 0);
  while (!queue.empty()) {
    const NodeID x = queue.pop_max().vertex;
    visited[x] = true;
    ++scanned;
    if (config.track_cut_side) order.push_back(x);

    // alpha + c(x) >= 2 r(x): the result is the weight of a cut.
    alpha = checked_add(alpha, graph.weighted_degree(x)) - 2 * r[x];
    if (scanned < n && alpha < lambda_hat) {
      lambda_hat = alpha;
      best_prefix = scanned;
    }

    for (const auto& arc : graph.neighbors(x)) {
      const NodeID y = arc.target;
      if (visited[y]) continue;
      const EdgeWeight before = r[y];
      r[y] = before + arc.weight;
      if (before < lambda_hat && lambda_hat <= r[y]) {
        if (uf.unite(x, y)) ++result.unions;
      }
      on_edge(x, y, arc.weight, std::min(r[y], cap));
      if (queue.contains(y)) {
        queue.increase_key(y, r[y]);
      } else {
        queue.insert(y, r[y]);
      }
    }
  }
  if (scanned != n) throw ContractViolation("capforest requires a connected graph");

  result.labels = uf.canonical_labels();
  result.lambda_hat = lambda_hat;
  if (config.track_cut_side && best_prefix > 0) {
    result.cut_side.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_prefix));
  }
  result.queue_stats = queue.stats();
  return result;
}

template <class EdgeHook>
ScanResult dispatch(const Graph& graph, EdgeWeight lambda_hat, NodeID start, const ScanConfig& config,
                    EdgeHook&& on_edge) {
  switch (config.queue) {
    case QueueKind::kHeap:
      return scan<BottomUpHeap>(graph, lambda_hat, start, config, on_edge);
    case QueueKind::kBStack:
      return scan<BStack>(graph, lambda_hat, start, config, on_edge);
    case QueueKind::kBQueue:
      return scan<BQueue>(graph, lambda_hat, start, config, on_edge);
  }
  throw ContractViolation("unknown queue kind");
}

}  // namespace

ScanResult capforest(const Graph& graph, EdgeWeight lambda_hat, NodeID start, const ScanConfig& config) {
  return dispatch(graph, lambda_hat, start, config, [](NodeID, NodeID, EdgeWeight, EdgeWeight) {});
}

std::vector<ScannedEdge> q_lower_bounds(const Graph& graph, EdgeWeight lambda_hat, NodeID start, QueueKind queue,
                                        CapMode mode) {
  std::vector<ScannedEdge> edges;
  edges.reserve(graph.num_edges());
  ScanConfig config{queue, mode, false};
  dispatch(graph, lambda_hat, start, config,
           [&](NodeID x, NodeID y, EdgeWeight w, EdgeWeight q) { edges.push_back({x, y, w, q}); });
  return edges;
}

}  // namespace parcut
