#include "parcut/mincut.hpp"

#include <algorithm>
#include <chrono>

#include "parcut/parallel_capforest.hpp"

namespace parcut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t round_seed(std::uint64_t seed, std::size_t round) {
  return seed + 0x9e3779b97f4a7c15ULL * round;
}

// Best cut found so far, as a vertex set of some contraction level.
struct Witness {
  std::size_t level = 0;
  std::vector<NodeID> vertices;
};

}  // namespace

std::vector<NodeID> recover_partition(const ContractionHistory& history, std::size_t level,
                                      std::span<const NodeID> witness) {
  if (level > history.block_maps.size()) throw ContractViolation("partition level was not tracked");
  if (level == 0) {
    std::vector<NodeID> out(witness.begin(), witness.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  const auto& last = history.block_maps[level - 1];
  std::vector<bool> inside(*std::max_element(last.begin(), last.end()) + 1, false);
  for (NodeID v : witness) {
    if (v >= inside.size()) throw ContractViolation("witness vertex outside its level");
    inside[v] = true;
  }
  std::vector<NodeID> out;
  const auto n = static_cast<NodeID>(history.block_maps.front().size());
  for (NodeID v = 0; v < n; ++v) {
    NodeID id = v;
    for (std::size_t l = 0; l < level; ++l) id = history.block_maps[l][id];
    if (inside[id]) out.push_back(v);
  }
  return out;
}

CutResult exact_mincut(const Graph& graph, const DriverConfig& config) {
  const NodeID n = graph.num_nodes();
  if (n < 2) throw InputError("a minimum cut needs at least two vertices");
  CutResult result;
  result.has_partition = config.emit_partition;

  NodeID components = 0;
  auto component = connected_components(graph, &components);
  if (components > 1) {
    if (config.emit_partition) {
      for (NodeID v = 0; v < n; ++v) {
        if (component[v] == component[0]) result.partition.push_back(v);
      }
    }
    return result;
  }

  auto start = Clock::now();
  BoundResult bound;
  if (config.bound == BoundMethod::kMinDegree) {
    bound = min_degree_bound(graph);
  } else {
    LabelPropagationConfig lp = config.label_propagation;
    lp.seed = config.seed;
    lp.workers = config.workers;
    lp.queue = config.queue;
    bound = inexact_bound(graph, lp);
  }
  result.bound_seconds = seconds_since(start);
  result.initial_bound = bound.value;

  EdgeWeight lambda_hat = bound.value;
  Witness witness{0, std::move(bound.witness)};
  auto lower = [&](EdgeWeight value, std::size_t level, const std::vector<NodeID>& side) {
    if (value >= lambda_hat) return;
    lambda_hat = value;
    if (config.emit_partition) witness = {level, side};
  };

  ContractionHistory history;
  Graph owned;
  const Graph* current = &graph;
  std::size_t round = 0;
  while (current->num_nodes() > 2) {
    RoundStats stats;
    stats.nodes = current->num_nodes();
    stats.edges = current->num_edges();
    const std::uint64_t seed = round_seed(config.seed, round);

    auto scan_start = Clock::now();
    ParallelScanConfig pconfig{config.queue, config.cap_mode, config.workers, seed, config.emit_partition};
    ScanResult scan = parallel_capforest(*current, lambda_hat, pconfig);
    lower(scan.lambda_hat, round, scan.cut_side);
    // A full sequential pass always marks an edge unless its own cut lowered
    // the bound mid-pass; repeat with the lowered bound until one does.
    while (scan.unions == 0) {
      stats.fallback = true;
      ++result.fallbacks;
      ScanConfig sconfig{config.queue, config.cap_mode, config.emit_partition};
      scan = capforest(*current, lambda_hat, random_start_vertex(current->num_nodes(), seed), sconfig);
      const bool improved = scan.lambda_hat < lambda_hat;
      lower(scan.lambda_hat, round, scan.cut_side);
      if (scan.unions == 0 && !improved) throw ContractViolation("sequential capforest made no progress");
    }
    stats.scan_seconds = seconds_since(scan_start);
    stats.unions = scan.unions;

    auto contract_start = Clock::now();
    ContractionResult contracted =
        contract(*current, scan.labels, lambda_hat, {config.workers, config.heavy_divisor});
    stats.contract_seconds = seconds_since(contract_start);
    if (config.on_round) config.on_round(RoundEvent{round, *current, lambda_hat, scan, contracted});
    lower(contracted.lambda_hat, round, contracted.witness);
    stats.lambda_hat = lambda_hat;
    result.round_stats.push_back(stats);

    if (config.emit_partition) history.block_maps.push_back(std::move(contracted.block_of));
    owned = std::move(contracted.graph);
    current = &owned;
    ++round;
  }

  if (current->num_nodes() == 2) lower(current->weighted_degree(0), round, {0});

  result.value = lambda_hat;
  result.rounds = round;
  if (config.emit_partition) result.partition = recover_partition(history, witness.level, witness.vertices);
  return result;
}

}  // namespace parcut
