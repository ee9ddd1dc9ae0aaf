#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "parcut/graph.hpp"
#include "parcut/pqueue.hpp"

namespace parcut {

// kCapped clamps queue keys at the current bound; kUncapped keeps exact
// r-values (cap = maximum weighted degree) for A/B comparisons.
enum class CapMode { kCapped, kUncapped };

struct ScanConfig {
  QueueKind queue = QueueKind::kBQueue;
  CapMode cap_mode = CapMode::kCapped;
  // Keep the scanned set that realizes an improved bound.
  bool track_cut_side = false;
};

struct ScanResult {
  // Per vertex, the smallest vertex of its union-find block.
  std::vector<NodeID> labels;
  EdgeWeight lambda_hat = 0;
  // Successful unions, i.e. n - number of blocks.
  std::size_t unions = 0;
  // Vertices of the scanned set whose cut lowered lambda_hat (empty if it
  // never dropped below the input bound or tracking was off).
  std::vector<NodeID> cut_side;
  QueueStats queue_stats;
};

struct ScannedEdge {
  NodeID from;
  NodeID to;
  EdgeWeight weight;
  EdgeWeight q;
};

// Queue key bound for a scan of `graph` starting from bound `lambda_hat`.
EdgeWeight queue_cap(const Graph& graph, EdgeWeight lambda_hat, CapMode mode);

// The start vertex a seeded scan uses; also the first start of a parallel scan.
NodeID random_start_vertex(NodeID n, std::uint64_t seed);

/*
 * Single CAPFOREST pass from `start`.
 *
 * Vertices are scanned in order of their (capped) connection weight r to the
 * scanned set. Scanning edge (x,y) unions x and y when r(y) crosses the
 * current bound, i.e. r(y) < lambda_hat <= r(y) + c(x,y). The cut between the
 * scanned set and the rest lowers lambda_hat while the scanned set is a proper
 * subset. Throws ContractViolation if the graph is disconnected or empty.
 */
ScanResult capforest(const Graph& graph, EdgeWeight lambda_hat, NodeID start, const ScanConfig& config = {});

// Same scan, reporting q(e) (the capped r-value right after the edge scan) for every scanned edge.
std::vector<ScannedEdge> q_lower_bounds(const Graph& graph, EdgeWeight lambda_hat, NodeID start,
                                        QueueKind queue = QueueKind::kBQueue, CapMode mode = CapMode::kCapped);

}  // namespace parcut
