#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

enum class QueueKind { kHeap, kBStack, kBQueue };

std::string_view to_string(QueueKind kind);
// Accepts "heap", "bstack", "bqueue"; throws InputError otherwise.
QueueKind parse_queue_kind(std::string_view name);

struct QueueEntry {
  NodeID vertex;
  EdgeWeight priority;
};

struct QueueStats {
  std::size_t inserts = 0;
  std::size_t updates = 0;        // increase_key calls that changed the stored key
  std::size_t capped_updates = 0; // increase_key calls ignored because the key sat at cap
  std::size_t pops = 0;
  std::size_t bucket_scans = 0;   // empty buckets stepped over by the top pointer
};

/*
 * Bounded addressable max-priority queues over vertex ids in [0, universe).
 *
 * Stored priorities live in [0, cap]; insert and increase_key clamp to cap,
 * and increase_key on a vertex already at cap is ignored without moving it.
 * pop_max may return any vertex whose key equals the current maximum.
 */

namespace detail {

class QueueBase {
 public:
  QueueBase(NodeID universe, EdgeWeight cap) : cap_(cap), key_(universe, kAbsent) {}

  EdgeWeight cap() const { return cap_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(NodeID v) const { return v < key_.size() && key_[v] != kAbsent; }
  EdgeWeight priority(NodeID v) const {
    if (!contains(v)) throw ContractViolation("priority of a vertex not in the queue");
    return key_[v];
  }
  const QueueStats& stats() const { return stats_; }

 protected:
  static constexpr EdgeWeight kAbsent = kMaxWeight;

  EdgeWeight clamp(EdgeWeight p) const { return p < cap_ ? p : cap_; }

  void check_insert(NodeID v) const {
    if (v >= key_.size()) throw ContractViolation("vertex id outside the queue universe");
    if (key_[v] != kAbsent) throw ContractViolation("vertex inserted twice");
  }

  // Returns false when the update is a no-op.
  bool check_increase(NodeID v, EdgeWeight p) {
    if (!contains(v)) throw ContractViolation("increase_key on a vertex not in the queue");
    if (p < key_[v]) throw ContractViolation("increase_key would decrease the key");
    if (key_[v] == cap_) {
      ++stats_.capped_updates;
      return false;
    }
    return clamp(p) != key_[v];
  }

  void check_pop() const {
    if (size_ == 0) throw ContractViolation("pop_max on an empty queue");
  }

  EdgeWeight cap_;
  std::vector<EdgeWeight> key_;
  std::size_t size_ = 0;
  QueueStats stats_;
};

enum class BucketOrder { kLifo, kFifo };

// Bucket array indexed by key with one intrusive doubly linked list per
// bucket, so removal from the middle of a bucket is O(1).
template <BucketOrder Order>
class BucketQueue : public QueueBase {
 public:
  BucketQueue(NodeID universe, EdgeWeight cap)
      : QueueBase(universe, cap),
        head_(bucket_count(cap), kInvalidNode),
        tail_(bucket_count(cap), kInvalidNode),
        next_(universe, kInvalidNode),
        prev_(universe, kInvalidNode) {}

  void insert(NodeID v, EdgeWeight p) {
    check_insert(v);
    key_[v] = clamp(p);
    push_back(v);
    ++size_;
    ++stats_.inserts;
  }

  void increase_key(NodeID v, EdgeWeight p) {
    if (!check_increase(v, p)) return;
    unlink(v);
    key_[v] = clamp(p);
    push_back(v);
    ++stats_.updates;
  }

  QueueEntry pop_max() {
    check_pop();
    while (head_[top_] == kInvalidNode) {
      --top_;
      ++stats_.bucket_scans;
    }
    const NodeID v = Order == BucketOrder::kFifo ? head_[top_] : tail_[top_];
    const EdgeWeight p = key_[v];
    unlink(v);
    key_[v] = kAbsent;
    --size_;
    ++stats_.pops;
    return {v, p};
  }

 private:
  static std::size_t bucket_count(EdgeWeight cap) {
    if (cap >= (EdgeWeight{1} << 32)) throw InputError("bucket queue cap too large; use the heap queue");
    return static_cast<std::size_t>(cap) + 1;
  }

  void push_back(NodeID v) {
    const EdgeWeight b = key_[v];
    prev_[v] = tail_[b];
    next_[v] = kInvalidNode;
    if (tail_[b] == kInvalidNode) {
      head_[b] = v;
    } else {
      next_[tail_[b]] = v;
    }
    tail_[b] = v;
    if (b > top_) top_ = b;
  }

  void unlink(NodeID v) {
    const EdgeWeight b = key_[v];
    if (prev_[v] == kInvalidNode) {
      head_[b] = next_[v];
    } else {
      next_[prev_[v]] = next_[v];
    }
    if (next_[v] == kInvalidNode) {
      tail_[b] = prev_[v];
    } else {
      prev_[next_[v]] = prev_[v];
    }
  }

  std::vector<NodeID> head_;
  std::vector<NodeID> tail_;
  std::vector<NodeID> next_;
  std::vector<NodeID> prev_;
  EdgeWeight top_ = 0;
};

}  // namespace detail

// Bucket queue popping the most recently inserted or updated vertex of the top bucket.
using BStack = detail::BucketQueue<detail::BucketOrder::kLifo>;
// Bucket queue popping the earliest queued vertex of the top bucket.
using BQueue = detail::BucketQueue<detail::BucketOrder::kFifo>;

// Addressable binary max-heap; deletions sift the root hole down to a leaf
// along the larger child before refilling it (bottom-up heuristic).
class BottomUpHeap : public detail::QueueBase {
 public:
  BottomUpHeap(NodeID universe, EdgeWeight cap) : QueueBase(universe, cap), pos_(universe, kInvalidNode) {
    heap_.reserve(64);
  }

  void insert(NodeID v, EdgeWeight p) {
    check_insert(v);
    key_[v] = clamp(p);
    heap_.push_back(v);
    pos_[v] = static_cast<NodeID>(heap_.size() - 1);
    sift_up(pos_[v]);
    ++size_;
    ++stats_.inserts;
  }

  void increase_key(NodeID v, EdgeWeight p) {
    if (!check_increase(v, p)) return;
    key_[v] = clamp(p);
    sift_up(pos_[v]);
    ++stats_.updates;
  }

  QueueEntry pop_max() {
    check_pop();
    const NodeID top = heap_.front();
    const EdgeWeight p = key_[top];
    const std::size_t n = heap_.size();
    std::size_t hole = 0;
    for (std::size_t child = 1; child < n; child = 2 * hole + 1) {
      if (child + 1 < n && key_[heap_[child + 1]] > key_[heap_[child]]) ++child;
      place(hole, heap_[child]);
      hole = child;
    }
    const NodeID last = heap_.back();
    heap_.pop_back();
    if (hole < heap_.size()) {
      place(hole, last);
      sift_up(hole);
    }
    key_[top] = kAbsent;
    pos_[top] = kInvalidNode;
    --size_;
    ++stats_.pops;
    return {top, p};
  }

 private:
  void place(std::size_t slot, NodeID v) {
    heap_[slot] = v;
    pos_[v] = static_cast<NodeID>(slot);
  }

  void sift_up(std::size_t slot) {
    const NodeID v = heap_[slot];
    while (slot > 0) {
      std::size_t parent = (slot - 1) / 2;
      if (key_[heap_[parent]] >= key_[v]) break;
      place(slot, heap_[parent]);
      slot = parent;
    }
    place(slot, v);
  }

  std::vector<NodeID> heap_;
  std::vector<NodeID> pos_;
};

}  // namespace parcut
