#pragma once

#include <atomic>
#include <memory>
#include <vector>

#include "parcut/graph.hpp"

namespace parcut {

/*
 * Fixed-capacity open-addressing table mapping block pairs to summed weights.
 * add() is lock-free and safe to call from any number of threads: keys are
 * claimed with CAS, weights accumulated with fetch_add.
 */
class ConcurrentEdgeTable {
 public:
  // Capacity is at least twice `max_keys`, rounded up to a power of two.
  explicit ConcurrentEdgeTable(std::size_t max_keys);

  // Throws WeightOverflow if the accumulated weight exceeds 64 bits.
  void add(NodeID a, NodeID b, EdgeWeight weight);

  // Aggregated entries with u < v; call after all adds completed.
  std::vector<WeightedEdge> entries() const;

  static std::uint64_t key_of(NodeID a, NodeID b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::size_t mask_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> keys_;
  std::unique_ptr<std::atomic<EdgeWeight>[]> weights_;
};

}  // namespace parcut
