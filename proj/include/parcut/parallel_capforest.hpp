#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "parcut/capforest.hpp"
#include "parcut/union_find.hpp"

namespace parcut {

struct ParallelScanConfig {
  QueueKind queue = QueueKind::kBQueue;
  CapMode cap_mode = CapMode::kCapped;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  bool track_cut_side = false;
};

// Start vertices of the workers, drawn from one seeded stream.
std::vector<NodeID> draw_start_vertices(NodeID n, std::size_t workers, std::uint64_t seed);

/*
 * State shared by all workers of one parallel scan: the graph, the visited
 * array T, the concurrent union-find, and the bound, lowered by CAS-min.
 */
class SharedScanState {
 public:
  SharedScanState(const Graph& graph, EdgeWeight lambda_hat, bool track_cut_side);

  const Graph& graph() const { return graph_; }
  ConcurrentUnionFind& union_find() { return uf_; }
  EdgeWeight lambda_hat() const { return lambda_hat_.load(std::memory_order_acquire); }
  std::size_t unions() const { return unions_.load(std::memory_order_acquire); }

  bool claimed(NodeID v) const { return visited_[v].load(std::memory_order_relaxed) != 0; }
  // Plain store: two workers may both claim a vertex, which only costs unions.
  void claim(NodeID v) { visited_[v].store(1, std::memory_order_relaxed); }

  // Lowers the bound to `value` if smaller; `side` is copied when it wins.
  void offer_cut(EdgeWeight value, const std::vector<NodeID>& side);
  void record_union() { unions_.fetch_add(1, std::memory_order_relaxed); }

  // Call after all workers finished.
  ScanResult finish(EdgeWeight input_lambda_hat, QueueStats stats);

 private:
  const Graph& graph_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> visited_;
  ConcurrentUnionFind uf_;
  std::atomic<EdgeWeight> lambda_hat_;
  std::atomic<std::size_t> unions_{0};
  bool track_cut_side_;
  std::mutex cut_mutex_;
  EdgeWeight best_value_;
  std::vector<NodeID> best_side_;
};

/*
 * One worker of the parallel scan, advanced one step at a time.
 *
 * A step either pops a vertex and checks T (blacklisting it if another worker
 * owns it) or, for a vertex that was unclaimed, claims it, updates alpha and
 * the bound, and scans its edges. The split lets a scheduler interleave the
 * check and the claim of different workers.
 */
template <class Queue>
class CapforestWorker {
 public:
  CapforestWorker(SharedScanState& shared, NodeID start, EdgeWeight cap)
      : shared_(shared),
        queue_(shared.graph().num_nodes(), cap),
        r_(shared.graph().num_nodes(), 0),
        state_(shared.graph().num_nodes(), kUnseen) {
    queue_.insert(start, 0);
  }

  bool done() const { return pending_ == kInvalidNode && queue_.empty(); }

  void step() {
    if (pending_ == kInvalidNode) {
      const NodeID x = queue_.pop_max().vertex;
      if (shared_.claimed(x)) {
        state_[x] = kBlacklisted;
      } else {
        pending_ = x;
      }
      return;
    }
    const NodeID x = pending_;
    pending_ = kInvalidNode;
    shared_.claim(x);
    scan_vertex(x);
  }

  void run() {
    while (!done()) step();
  }

  // Cut between the locally scanned set and the rest, offered only while the
  // scanned set is a proper non-empty subset of V.
  std::optional<EdgeWeight> alpha_candidate() const {
    if (order_.empty() || order_.size() >= shared_.graph().num_nodes()) return std::nullopt;
    return alpha_;
  }

  const std::vector<NodeID>& scanned() const { return order_; }
  bool blacklisted(NodeID v) const { return state_[v] == kBlacklisted; }
  const QueueStats& queue_stats() const { return queue_.stats(); }

 private:
  static constexpr std::uint8_t kUnseen = 0;
  static constexpr std::uint8_t kVisited = 1;
  static constexpr std::uint8_t kBlacklisted = 2;

  void scan_vertex(NodeID x) {
    const Graph& graph = shared_.graph();
    state_[x] = kVisited;
    order_.push_back(x);
    alpha_ = checked_add(alpha_, graph.weighted_degree(x)) - 2 * r_[x];
    if (auto cut = alpha_candidate(); cut && *cut < shared_.lambda_hat()) {
      shared_.offer_cut(*cut, order_);
    }
    const EdgeWeight lambda_hat = shared_.lambda_hat();
    for (const auto& arc : graph.neighbors(x)) {
      const NodeID y = arc.target;
      if (state_[y] != kUnseen) continue;
      const EdgeWeight before = r_[y];
      r_[y] = before + arc.weight;
      if (before < lambda_hat && lambda_hat <= r_[y]) {
        if (shared_.union_find().unite(x, y)) shared_.record_union();
      }
      if (queue_.contains(y)) {
        queue_.increase_key(y, r_[y]);
      } else {
        queue_.insert(y, r_[y]);
      }
    }
  }

  SharedScanState& shared_;
  Queue queue_;
  std::vector<EdgeWeight> r_;
  std::vector<std::uint8_t> state_;
  std::vector<NodeID> order_;
  EdgeWeight alpha_ = 0;
  NodeID pending_ = kInvalidNode;
};

/*
 * Parallel CAPFOREST: every worker grows a region from its own random start,
 * skipping vertices another worker already claimed. Unions go to one shared
 * concurrent union-find; the result may contain no union at all.
 */
ScanResult parallel_capforest(const Graph& graph, EdgeWeight lambda_hat, const ParallelScanConfig& config);

}  // namespace parcut
