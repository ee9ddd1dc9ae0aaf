#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parcut/bound_estimator.hpp"
#include "parcut/capforest.hpp"
#include "parcut/contraction.hpp"
#include "parcut/graph.hpp"

namespace parcut {

struct RoundEvent;

struct DriverConfig {
  QueueKind queue = QueueKind::kBQueue;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  BoundMethod bound = BoundMethod::kLabelPropagation;
  CapMode cap_mode = CapMode::kCapped;
  bool emit_partition = false;
  // Only iterations and threshold are read; seed, workers and queue follow the driver.
  LabelPropagationConfig label_propagation;
  std::size_t heavy_divisor = 16;
  // Called after every contraction, before the bound is updated from it.
  std::function<void(const RoundEvent&)> on_round;
};

struct RoundEvent {
  std::size_t round;
  const Graph& graph;
  // Bound the contraction was computed against (after the scan lowered it).
  EdgeWeight lambda_hat;
  const ScanResult& scan;
  const ContractionResult& contraction;
};

struct RoundStats {
  NodeID nodes = 0;
  EdgeID edges = 0;
  std::size_t unions = 0;
  bool fallback = false;
  EdgeWeight lambda_hat = 0;
  double scan_seconds = 0;
  double contract_seconds = 0;
};

struct CutResult {
  EdgeWeight value = 0;
  // One side of a minimum cut in input ids; filled iff emit_partition.
  std::vector<NodeID> partition;
  bool has_partition = false;
  EdgeWeight initial_bound = 0;
  double bound_seconds = 0;
  std::size_t rounds = 0;
  std::size_t fallbacks = 0;
  std::vector<RoundStats> round_stats;
};

// Block maps of successive contractions: block_maps[l] maps level-l vertices to level l+1.
struct ContractionHistory {
  std::vector<std::vector<NodeID>> block_maps;
};

// Input vertices that end up inside `witness`, a vertex set of level `level`.
std::vector<NodeID> recover_partition(const ContractionHistory& history, std::size_t level,
                                      std::span<const NodeID> witness);

/*
 * Exact global minimum cut.
 *
 * Starts from the configured bound, then alternates parallel CAPFOREST
 * passes (with a sequential pass whenever the parallel one marks nothing)
 * and contractions until at most two vertices remain. Disconnected input
 * returns 0 immediately. Throws InputError for fewer than two vertices.
 */
CutResult exact_mincut(const Graph& graph, const DriverConfig& config = {});

}  // namespace parcut
