#include "parcut/union_find.hpp"

#include <algorithm>
#include <numeric>

namespace parcut {

UnionFind::UnionFind(NodeID n) : parent_(n), set_size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), NodeID{0});
}

void UnionFind::check(NodeID x) const {
  if (x >= parent_.size()) throw ContractViolation("union-find element out of range");
}

NodeID UnionFind::find(NodeID x) {
  check(x);
  NodeID root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    NodeID next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(NodeID x, NodeID y) {
  NodeID rx = find(x);
  NodeID ry = find(y);
  if (rx == ry) return false;
  if (set_size_[rx] < set_size_[ry]) std::swap(rx, ry);
  parent_[ry] = rx;
  set_size_[rx] += set_size_[ry];
  --sets_;
  return true;
}

std::vector<NodeID> UnionFind::canonical_labels() {
  std::vector<NodeID> smallest(parent_.size(), kInvalidNode);
  std::vector<NodeID> labels(parent_.size());
  for (NodeID v = 0; v < parent_.size(); ++v) {
    NodeID r = find(v);
    if (smallest[r] == kInvalidNode) smallest[r] = v;
    labels[v] = smallest[r];
  }
  return labels;
}

ConcurrentUnionFind::ConcurrentUnionFind(NodeID n)
    : n_(n), parent_(std::make_unique<std::atomic<NodeID>[]>(n)), sets_(n) {
  for (NodeID v = 0; v < n; ++v) parent_[v].store(v, std::memory_order_relaxed);
}

void ConcurrentUnionFind::check(NodeID x) const {
  if (x >= n_) throw ContractViolation("union-find element out of range");
}

NodeID ConcurrentUnionFind::find(NodeID x) {
  check(x);
  while (true) {
    NodeID p = parent_[x].load(std::memory_order_acquire);
    if (p == x) return x;
    NodeID gp = parent_[p].load(std::memory_order_acquire);
    if (gp != p) {
      // Path halving; losing the race only means less compression.
      parent_[x].compare_exchange_weak(p, gp, std::memory_order_acq_rel, std::memory_order_relaxed);
    }
    x = gp;
  }
}

bool ConcurrentUnionFind::unite(NodeID x, NodeID y) {
  while (true) {
    NodeID rx = find(x);
    NodeID ry = find(y);
    if (rx == ry) return false;
    if (rx < ry) std::swap(rx, ry);
    // rx is the larger root; it may only be linked while it is still a root.
    NodeID expected = rx;
    if (parent_[rx].compare_exchange_strong(expected, ry, std::memory_order_acq_rel, std::memory_order_acquire)) {
      sets_.fetch_sub(1, std::memory_order_acq_rel);
      return true;
    }
  }
}

bool ConcurrentUnionFind::same_set(NodeID x, NodeID y) {
  while (true) {
    NodeID rx = find(x);
    NodeID ry = find(y);
    if (rx == ry) return true;
    // rx still a root means no union touched it since the find: the answer is current.
    if (parent_[rx].load(std::memory_order_acquire) == rx) return false;
  }
}

std::vector<NodeID> ConcurrentUnionFind::canonical_labels() {
  std::vector<NodeID> labels(n_);
  for (NodeID v = 0; v < n_; ++v) labels[v] = find(v);
  return labels;
}

NodeID count_blocks(const std::vector<NodeID>& labels) {
  std::vector<NodeID> sorted(labels);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<NodeID>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace parcut
