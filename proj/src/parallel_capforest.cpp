#include "parcut/parallel_capforest.hpp"

#include <random>
#include <thread>

namespace parcut {

std::vector<NodeID> draw_start_vertices(NodeID n, std::size_t workers, std::uint64_t seed) {
  if (n == 0) throw ContractViolation("start vertices of an empty graph");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeID> pick(0, n - 1);
  std::vector<NodeID> starts(workers);
  for (auto& s : starts) s = pick(rng);
  return starts;
}

SharedScanState::SharedScanState(const Graph& graph, EdgeWeight lambda_hat, bool track_cut_side)
    : graph_(graph),
      visited_(std::make_unique<std::atomic<std::uint8_t>[]>(graph.num_nodes())),
      uf_(graph.num_nodes()),
      lambda_hat_(lambda_hat),
      track_cut_side_(track_cut_side),
      best_value_(lambda_hat) {
  for (NodeID v = 0; v < graph.num_nodes(); ++v) visited_[v].store(0, std::memory_order_relaxed);
}

void SharedScanState::offer_cut(EdgeWeight value, const std::vector<NodeID>& side) {
  EdgeWeight current = lambda_hat_.load(std::memory_order_acquire);
  while (value < current) {
    if (lambda_hat_.compare_exchange_weak(current, value, std::memory_order_acq_rel, std::memory_order_acquire)) {
      break;
    }
  }
  if (!track_cut_side_) return;
  std::lock_guard lock(cut_mutex_);
  if (value < best_value_) {
    best_value_ = value;
    best_side_ = side;
  }
}

ScanResult SharedScanState::finish(EdgeWeight input_lambda_hat, QueueStats stats) {
  ScanResult result;
  result.labels = uf_.canonical_labels();
  result.lambda_hat = std::min(input_lambda_hat, lambda_hat());
  result.unions = unions();
  if (track_cut_side_ && best_value_ < input_lambda_hat) result.cut_side = best_side_;
  result.queue_stats = stats;
  return result;
}

namespace {

void accumulate(QueueStats& into, const QueueStats& from) {
  into.inserts += from.inserts;
  into.updates += from.updates;
  into.capped_updates += from.capped_updates;
  into.pops += from.pops;
  into.bucket_scans += from.bucket_scans;
}

template <class Queue>
ScanResult run_workers(const Graph& graph, EdgeWeight lambda_hat, const ParallelScanConfig& config) {
  const std::size_t workers = std::max<std::size_t>(config.workers, 1);
  SharedScanState shared(graph, lambda_hat, config.track_cut_side);
  const EdgeWeight cap = queue_cap(graph, lambda_hat, config.cap_mode);
  const auto starts = draw_start_vertices(graph.num_nodes(), workers, config.seed);

  std::vector<std::unique_ptr<CapforestWorker<Queue>>> pool;
  pool.reserve(workers);
  if (workers == 1) {
    pool.push_back(std::make_unique<CapforestWorker<Queue>>(shared, starts[0], cap));
    pool[0]->run();
  } else {
    pool.resize(workers);
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        pool[w] = std::make_unique<CapforestWorker<Queue>>(shared, starts[w], cap);
        pool[w]->run();
      });
    }
  }
  QueueStats stats;
  for (const auto& worker : pool) accumulate(stats, worker->queue_stats());
  return shared.finish(lambda_hat, stats);
}

}  // namespace

ScanResult parallel_capforest(const Graph& graph, EdgeWeight lambda_hat, const ParallelScanConfig& config) {
  if (graph.num_nodes() == 0) throw ContractViolation("parallel capforest on an empty graph");
  if (lambda_hat == 0) throw ContractViolation("parallel capforest needs lambda_hat >= 1");
  switch (config.queue) {
    case QueueKind::kHeap:
      return run_workers<BottomUpHeap>(graph, lambda_hat, config);
    case QueueKind::kBStack:
      return run_workers<BStack>(graph, lambda_hat, config);
    case QueueKind::kBQueue:
      return run_workers<BQueue>(graph, lambda_hat, config);
  }
  throw ContractViolation("unknown queue kind");
}

}  // namespace parcut
