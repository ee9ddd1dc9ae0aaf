#include "parcut/contraction.hpp"

#include <algorithm>
#include <bit>

#include "parcut/edge_table.hpp"
#include "parcut/parallel.hpp"

namespace parcut {

ConcurrentEdgeTable::ConcurrentEdgeTable(std::size_t max_keys) {
  const std::size_t capacity = std::bit_ceil(std::max<std::size_t>(2 * max_keys, 16));
  mask_ = capacity - 1;
  keys_ = std::make_unique<std::atomic<std::uint64_t>[]>(capacity);
  weights_ = std::make_unique<std::atomic<EdgeWeight>[]>(capacity);
  for (std::size_t i = 0; i < capacity; ++i) {
    keys_[i].store(kEmpty, std::memory_order_relaxed);
    weights_[i].store(0, std::memory_order_relaxed);
  }
}

void ConcurrentEdgeTable::add(NodeID a, NodeID b, EdgeWeight weight) {
  const std::uint64_t key = key_of(a, b);
  for (std::size_t i = mix(key) & mask_, probes = 0; probes <= mask_; i = (i + 1) & mask_, ++probes) {
    std::uint64_t current = keys_[i].load(std::memory_order_acquire);
    if (current == kEmpty) {
      if (keys_[i].compare_exchange_strong(current, key, std::memory_order_acq_rel, std::memory_order_acquire)) {
        current = key;
      }
    }
    if (current != key) continue;
    const EdgeWeight before = weights_[i].fetch_add(weight, std::memory_order_relaxed);
    if (before + weight < before) throw WeightOverflow("contracted edge weight overflows 64 bits");
    return;
  }
  throw ContractViolation("edge table is full");
}

std::vector<WeightedEdge> ConcurrentEdgeTable::entries() const {
  std::vector<WeightedEdge> out;
  for (std::size_t i = 0; i <= mask_; ++i) {
    const std::uint64_t key = keys_[i].load(std::memory_order_acquire);
    if (key == kEmpty) continue;
    out.push_back({static_cast<NodeID>(key >> 32), static_cast<NodeID>(key & 0xffffffffULL),
                   weights_[i].load(std::memory_order_acquire)});
  }
  return out;
}

std::vector<NodeID> renumber_blocks(const std::vector<NodeID>& labels, NodeID* block_count) {
  const NodeID n = static_cast<NodeID>(labels.size());
  std::vector<NodeID> id_of_label(n, kInvalidNode);
  std::vector<NodeID> block_of(n);
  NodeID next = 0;
  for (NodeID v = 0; v < n; ++v) {
    if (labels[v] >= n) throw ContractViolation("partition label out of range");
    NodeID& id = id_of_label[labels[v]];
    if (id == kInvalidNode) id = next++;
    block_of[v] = id;
  }
  if (block_count != nullptr) *block_count = next;
  return block_of;
}

EdgeWeight heavy_pair_accumulate(const Graph& graph, const std::vector<NodeID>& block_of, NodeID a, NodeID b,
                                 std::size_t workers) {
  if (a == b) throw ContractViolation("heavy pair needs two distinct blocks");
  std::vector<EdgeWeight> partial(std::max<std::size_t>(workers, 1), 0);
  parallel_ranges(graph.num_nodes(), workers, [&](std::size_t begin, std::size_t end, std::size_t w) {
    EdgeWeight sum = 0;
    for (auto u = static_cast<NodeID>(begin); u < end; ++u) {
      if (block_of[u] != a) continue;
      for (const auto& arc : graph.neighbors(u)) {
        if (block_of[arc.target] == b) sum = checked_add(sum, arc.weight);
      }
    }
    partial[w] = sum;
  });
  EdgeWeight total = 0;
  for (EdgeWeight s : partial) total = checked_add(total, s);
  return total;
}

ContractionResult contract(const Graph& graph, const std::vector<NodeID>& labels, EdgeWeight lambda_hat,
                           const ContractionConfig& config) {
  const NodeID n = graph.num_nodes();
  if (labels.size() != n) throw ContractViolation("partition does not cover the graph");

  ContractionResult result;
  NodeID blocks = 0;
  result.block_of = renumber_blocks(labels, &blocks);
  result.lambda_hat = lambda_hat;
  const auto& block_of = result.block_of;

  NodeID heavy_a = kInvalidNode;
  NodeID heavy_b = kInvalidNode;
  if (config.heavy_divisor > 0 && blocks >= 2) {
    std::vector<NodeID> size(blocks, 0);
    for (NodeID b : block_of) ++size[b];
    std::vector<NodeID> by_size(blocks);
    for (NodeID b = 0; b < blocks; ++b) by_size[b] = b;
    std::partial_sort(by_size.begin(), by_size.begin() + 2, by_size.end(),
                      [&](NodeID x, NodeID y) { return size[x] != size[y] ? size[x] > size[y] : x < y; });
    const std::size_t threshold = n / config.heavy_divisor;
    if (size[by_size[1]] > threshold) {
      heavy_a = std::min(by_size[0], by_size[1]);
      heavy_b = std::max(by_size[0], by_size[1]);
      result.heavy_pair = std::make_pair(heavy_a, heavy_b);
    }
  }

  const std::size_t workers = std::max<std::size_t>(config.workers, 1);
  ConcurrentEdgeTable table(graph.num_edges());
  std::vector<EdgeWeight> heavy_partial(workers, 0);
  parallel_ranges(n, workers, [&](std::size_t begin, std::size_t end, std::size_t w) {
    EdgeWeight heavy_sum = 0;
    for (auto u = static_cast<NodeID>(begin); u < end; ++u) {
      const NodeID bu = block_of[u];
      for (const auto& arc : graph.neighbors(u)) {
        if (arc.target < u) continue;
        const NodeID bv = block_of[arc.target];
        if (bu == bv) continue;
        if (std::min(bu, bv) == heavy_a && std::max(bu, bv) == heavy_b) {
          heavy_sum = checked_add(heavy_sum, arc.weight);
        } else {
          table.add(bu, bv, arc.weight);
        }
      }
    }
    heavy_partial[w] = heavy_sum;
  });

  auto edges = table.entries();
  if (heavy_a != kInvalidNode) {
    EdgeWeight heavy = 0;
    for (EdgeWeight s : heavy_partial) heavy = checked_add(heavy, s);
    if (heavy > 0) edges.push_back({heavy_a, heavy_b, heavy});
  }
  result.graph = Graph::from_edges(blocks, edges);

  if (blocks >= 2) {
    auto [v, degree] = min_degree_vertex(result.graph);
    if (degree < result.lambda_hat) {
      result.lambda_hat = degree;
      for (NodeID u = 0; u < n; ++u) {
        if (block_of[u] == v) result.witness.push_back(u);
      }
    }
  }
  return result;
}

}  // namespace parcut
