#pragma once

#include <span>
#include <utility>
#include <vector>

#include "parcut/types.hpp"

namespace parcut {

struct WeightedEdge {
  NodeID u;
  NodeID v;
  EdgeWeight weight;
};

/**
 * Immutable weighted undirected graph in CSR layout.
 *
 * Every undirected edge {u,v} is stored as two arcs u->v and v->u with the
 * same weight. Self-loops and zero-weight edges are never stored, parallel
 * edges are merged by summing their weights. Neighbors of a vertex are sorted
 * by id, so two graphs with equal edge sets compare equal.
 */
class Graph {
 public:
  struct Arc {
    NodeID target;
    EdgeWeight weight;
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  Graph() : offsets_(1, 0) {}

  // Throws InputError if an endpoint is outside [0, n).
  static Graph from_edges(NodeID n, std::span<const WeightedEdge> edges);

  NodeID num_nodes() const { return static_cast<NodeID>(offsets_.size() - 1); }
  EdgeID num_edges() const { return arcs_.size() / 2; }
  EdgeID num_arcs() const { return arcs_.size(); }

  std::span<const Arc> neighbors(NodeID v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  EdgeID first_arc(NodeID v) const { return offsets_[v]; }
  NodeID degree(NodeID v) const { return static_cast<NodeID>(offsets_[v + 1] - offsets_[v]); }
  EdgeWeight weighted_degree(NodeID v) const { return weighted_degree_[v]; }
  EdgeWeight max_weighted_degree() const;
  EdgeWeight total_weight() const;

  // Weight between u and v, 0 if not adjacent.
  EdgeWeight edge_weight(NodeID u, NodeID v) const;

  // One entry per undirected edge with u < v, in CSR order.
  std::vector<WeightedEdge> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<EdgeID> offsets_;
  std::vector<Arc> arcs_;
  std::vector<EdgeWeight> weighted_degree_;
};

/**
 * Vertex correspondence produced by preprocessing or contraction.
 *
 * forward[original] is the new id (or kInvalidNode if the vertex was
 * removed); inverse[new] lists the original ids mapped onto it.
 */
struct VertexMap {
  std::vector<NodeID> forward;
  std::vector<std::vector<NodeID>> inverse;

  static VertexMap identity(NodeID n);
  // Builds both directions from forward, with inverse lists sorted.
  static VertexMap from_forward(std::vector<NodeID> forward, NodeID new_count);

  // Maps a set of new ids back to the sorted union of their original ids.
  std::vector<NodeID> to_original(std::span<const NodeID> new_ids) const;

  // this: A -> B, next: B -> C; result: A -> C.
  VertexMap then(const VertexMap& next) const;
};

// Returns a minimum weighted-degree vertex (smallest id on ties) and its degree.
std::pair<NodeID, EdgeWeight> min_degree_vertex(const Graph& graph);

enum class DegreeMode { kWeighted, kUnweighted };

// Maximal subgraph where every vertex has degree >= k, by iterative peeling.
std::pair<Graph, VertexMap> k_core(const Graph& graph, EdgeWeight k,
                                   DegreeMode mode = DegreeMode::kWeighted);

// Component label per vertex, labels numbered by smallest contained vertex.
std::vector<NodeID> connected_components(const Graph& graph, NodeID* count = nullptr);

bool is_connected(const Graph& graph);

// Induced subgraph on the component with the most vertices; ties go to the
// component containing the smallest vertex id.
std::pair<Graph, VertexMap> largest_connected_component(const Graph& graph);

// Subgraph induced by the vertices with keep[v] set, renumbered in id order.
std::pair<Graph, VertexMap> induced_subgraph(const Graph& graph, const std::vector<bool>& keep);

// Sum of weights of edges with exactly one endpoint in `side`.
EdgeWeight cut_weight(const Graph& graph, std::span<const NodeID> side);
EdgeWeight cut_weight(const Graph& graph, const std::vector<bool>& in_side);

}  // namespace parcut
