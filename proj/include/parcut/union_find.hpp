#pragma once

#include <atomic>
#include <memory>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

// Sequential disjoint sets with union by size and path compression.
class UnionFind {
 public:
  explicit UnionFind(NodeID n);

  NodeID find(NodeID x);
  // True iff x and y were in different sets.
  bool unite(NodeID x, NodeID y);

  NodeID size() const { return static_cast<NodeID>(parent_.size()); }
  NodeID num_sets() const { return sets_; }

  // Per element, the smallest element of its set.
  std::vector<NodeID> canonical_labels();

 private:
  void check(NodeID x) const;

  std::vector<NodeID> parent_;
  std::vector<NodeID> set_size_;
  NodeID sets_;
};

/*
 * Linearizable disjoint sets for concurrent find/unite.
 *
 * A union links the root with the larger id below the root with the smaller
 * id using a single CAS on the parent slot; find compresses by path halving.
 * The representative of a set is therefore always its smallest element.
 */
class ConcurrentUnionFind {
 public:
  explicit ConcurrentUnionFind(NodeID n);

  NodeID find(NodeID x);
  bool unite(NodeID x, NodeID y);
  bool same_set(NodeID x, NodeID y);

  NodeID size() const { return n_; }
  NodeID num_sets() const { return sets_.load(std::memory_order_acquire); }

  std::vector<NodeID> canonical_labels();

 private:
  void check(NodeID x) const;

  NodeID n_;
  std::unique_ptr<std::atomic<NodeID>[]> parent_;
  std::atomic<NodeID> sets_;
};

// Number of distinct values in a label vector.
NodeID count_blocks(const std::vector<NodeID>& labels);

}  // namespace parcut
