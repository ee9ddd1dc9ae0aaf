#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parcut/graph.hpp"

namespace parcut {

struct ContractionConfig {
  std::size_t workers = 1;
  // The two largest blocks are aggregated locally when both hold more than
  // n / heavy_divisor vertices. 0 disables the heavy-pair path.
  std::size_t heavy_divisor = 16;
};

struct ContractionResult {
  Graph graph;
  // Current vertex -> contracted vertex.
  std::vector<NodeID> block_of;
  EdgeWeight lambda_hat = 0;
  // Current vertices of the minimum-degree block when it lowered lambda_hat.
  std::vector<NodeID> witness;
  std::optional<std::pair<NodeID, NodeID>> heavy_pair;
};

// Dense block ids from arbitrary labels, ordered by each block's smallest vertex.
std::vector<NodeID> renumber_blocks(const std::vector<NodeID>& labels, NodeID* block_count = nullptr);

/*
 * Quotient graph of `graph` under the partition given by `labels`.
 *
 * Edges inside a block vanish, edges between two blocks are summed. If the
 * quotient has at least two vertices and one of them has weighted degree
 * below lambda_hat, the bound drops to that degree and the block is recorded
 * as witness.
 */
ContractionResult contract(const Graph& graph, const std::vector<NodeID>& labels, EdgeWeight lambda_hat,
                           const ContractionConfig& config = {});

// Total weight between blocks a and b, summed per worker and combined once.
EdgeWeight heavy_pair_accumulate(const Graph& graph, const std::vector<NodeID>& block_of, NodeID a, NodeID b,
                                 std::size_t workers = 1);

}  // namespace parcut
