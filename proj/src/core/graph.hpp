#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/types.hpp"

namespace riskplan {

// Undirected simple graph. Edges are stored canonically (u < v) in insertion
// order, which fixes the edge index space used by the forecast matrices.
// Node adjacency, edge adjacency (edges sharing a node) and all-pairs hop
// distances are built once; a Graph is immutable afterwards and safe to share
// across threads.
class Graph {
 public:
  Graph() = default;

  // require_connected is relaxed only for in-process construction (tests use
  // disconnected instances to probe forecast mass confinement); every file
  // and generator pathway enforces connectivity.
  static Graph from_edges(int node_count, std::vector<std::pair<NodeId, NodeId>> edge_list,
                          bool require_connected = true);

  // Random connected graph: uniform random spanning tree (random permutation
  // with random attachment), then distinct non-tree edges added uniformly
  // without replacement up to min(ceil(ratio*n), n*(n-1)/2) edges total.
  static Graph generate_random(int node_count, double edge_ratio, uint64_t seed);

  static Graph parse(const std::string& text);
  std::string serialize() const;

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  std::pair<NodeId, NodeId> endpoints(EdgeId e) const { return edges_[e]; }

  const std::vector<NodeId>& neighbors(NodeId u) const { return node_adjacency_[u]; }
  // Edges e' ~ e (sharing a node with e), excluding e itself. Sorted.
  const std::vector<EdgeId>& adjacent_edges(EdgeId e) const { return edge_adjacency_[e]; }
  const std::vector<EdgeId>& incident_edges(NodeId u) const { return incident_edges_[u]; }

  // -1 when the nodes are not adjacent.
  EdgeId edge_between(NodeId u, NodeId v) const { return edge_lut_[u * node_count_ + v]; }
  // Same but throws a descriptive error for unknown pairs.
  EdgeId resolve_edge(NodeId u, NodeId v) const;

  bool connected() const { return connected_; }

  // Unweighted shortest hop count; -1 between components of a disconnected
  // graph (cannot happen on the public pathways).
  int hop_distance(NodeId u, NodeId v) const { return hops_[u * node_count_ + v]; }

  // Hop-shortest node sequence from s to t. Deterministic: breadth-first
  // expansion visits neighbors in ascending index order, so ties resolve to
  // the lexicographically smallest parent chain.
  std::vector<NodeId> canonical_shortest_path(NodeId s, NodeId t) const;

  void check_node(NodeId u) const;
  void check_edge(EdgeId e) const;

 private:
  int node_count_ = 0;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::vector<NodeId>> node_adjacency_;
  std::vector<std::vector<EdgeId>> edge_adjacency_;
  std::vector<std::vector<EdgeId>> incident_edges_;
  std::vector<EdgeId> edge_lut_;
  std::vector<int> hops_;
  bool connected_ = false;
};

}  // namespace riskplan
