#include "core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace riskplan {

namespace {
constexpr int kMaxNodes = 4096;  // keeps the n^2 lookup tables sane
}

void Graph::check_node(NodeId u) const {
  if (u < 0 || u >= node_count_) {
    fail(Errc::InvalidArgument, "node index " + std::to_string(u) + " out of range [0, " +
                                    std::to_string(node_count_) + ")");
  }
}

void Graph::check_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) {
    fail(Errc::InvalidArgument, "edge index " + std::to_string(e) + " out of range [0, " +
                                    std::to_string(edge_count()) + ")");
  }
}

EdgeId Graph::resolve_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  EdgeId e = edge_between(u, v);
  if (e < 0) {
    fail(Errc::InvalidArgument,
         "no edge between nodes " + std::to_string(u) + " and " + std::to_string(v));
  }
  return e;
}

Graph Graph::from_edges(int node_count, std::vector<std::pair<NodeId, NodeId>> edge_list,
                        bool require_connected) {
  if (node_count < 1) fail(Errc::InvalidArgument, "graph needs at least one node");
  if (node_count > kMaxNodes) fail(Errc::LimitExceeded, "graph too large");

  Graph g;
  g.node_count_ = node_count;
  g.edge_lut_.assign(static_cast<size_t>(node_count) * node_count, -1);
  g.node_adjacency_.resize(node_count);
  g.incident_edges_.resize(node_count);

  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
      fail(Errc::ParseError, "edge endpoint out of range: [" + std::to_string(u) + ", " +
                                 std::to_string(v) + "]");
    }
    if (u == v) fail(Errc::ParseError, "self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      fail(Errc::ParseError,
           "duplicate edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
    }
    EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.emplace_back(u, v);
    g.edge_lut_[u * node_count + v] = id;
    g.edge_lut_[v * node_count + u] = id;
    g.node_adjacency_[u].push_back(v);
    g.node_adjacency_[v].push_back(u);
    g.incident_edges_[u].push_back(id);
    g.incident_edges_[v].push_back(id);
  }
  for (auto& adj : g.node_adjacency_) std::sort(adj.begin(), adj.end());
  for (auto& inc : g.incident_edges_) std::sort(inc.begin(), inc.end());

  // Edge adjacency: e' ~ e iff they share a node, e' != e.
  g.edge_adjacency_.resize(g.edges_.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges_[e];
    std::vector<EdgeId> adj;
    for (EdgeId o : g.incident_edges_[u]) {
      if (o != e) adj.push_back(o);
    }
    for (EdgeId o : g.incident_edges_[v]) {
      if (o != e) adj.push_back(o);
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_adjacency_[e] = std::move(adj);
  }

  // All-pairs hop distances by BFS from every node.
  g.hops_.assign(static_cast<size_t>(node_count) * node_count, -1);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < node_count; ++s) {
    int* row = &g.hops_[static_cast<size_t>(s) * node_count];
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId w : g.node_adjacency_[u]) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  g.connected_ = true;
  for (NodeId v = 0; v < node_count; ++v) {
    if (g.hops_[v] < 0) {
      g.connected_ = false;
      break;
    }
  }
  if (require_connected && !g.connected_) {
    fail(Errc::ParseError, "graph is not connected");
  }
  return g;
}

Graph Graph::generate_random(int node_count, double edge_ratio, uint64_t seed) {
  if (node_count < 2) fail(Errc::InvalidArgument, "random graph needs at least 2 nodes");
  if (node_count > kMaxNodes) fail(Errc::LimitExceeded, "graph too large");
  const long long complete = static_cast<long long>(node_count) * (node_count - 1) / 2;
  long long target = static_cast<long long>(std::ceil(edge_ratio * node_count));
  target = std::min(target, complete);
  if (target < node_count - 1) {
    fail(Errc::InvalidArgument, "edge ratio " + std::to_string(edge_ratio) +
                                    " yields fewer edges than a spanning tree on " +
                                    std::to_string(node_count) + " nodes");
  }

  RandomSource rng(seed);

  // Uniformly permuted spanning tree: attach each node to a random earlier one.
  std::vector<NodeId> perm(node_count);
  for (int i = 0; i < node_count; ++i) perm[i] = i;
  rng.shuffle(perm);

  std::vector<std::pair<NodeId, NodeId>> edge_list;
  edge_list.reserve(static_cast<size_t>(target));
  std::set<std::pair<NodeId, NodeId>> used;
  for (int i = 1; i < node_count; ++i) {
    NodeId a = perm[i];
    NodeId b = perm[rng.next_int(i)];
    if (a > b) std::swap(a, b);
    edge_list.emplace_back(a, b);
    used.insert({a, b});
  }

  // Remaining edges drawn uniformly without replacement from the complement.
  std::vector<std::pair<NodeId, NodeId>> pool;
  pool.reserve(static_cast<size_t>(complete) - edge_list.size());
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v) {
      if (!used.count({u, v})) pool.emplace_back(u, v);
    }
  }
  rng.shuffle(pool);
  for (size_t i = 0; edge_list.size() < static_cast<size_t>(target); ++i) {
    edge_list.push_back(pool[i]);
  }

  return from_edges(node_count, std::move(edge_list), /*require_connected=*/true);
}

std::vector<NodeId> Graph::canonical_shortest_path(NodeId s, NodeId t) const {
  check_node(s);
  check_node(t);
  std::vector<NodeId> parent(node_count_, -1);
  std::vector<char> visited(node_count_, 0);
  std::deque<NodeId> queue;
  visited[s] = 1;
  queue.push_back(s);
  while (!queue.empty() && !visited[t]) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : node_adjacency_[u]) {  // ascending: deterministic tie-breaking
      if (!visited[w]) {
        visited[w] = 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (!visited[t]) fail(Errc::InvalidArgument, "no path between requested nodes");
  std::vector<NodeId> path;
  for (NodeId cur = t; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph Graph::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "graph document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "nodes" && key != "edges") {
      fail(Errc::ParseError, "unknown graph field \"" + key + "\"");
    }
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_number_integer()) {
    fail(Errc::ParseError, "graph document needs an integer \"nodes\" field");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail(Errc::ParseError, "graph document needs an \"edges\" array");
  }
  int n = doc["nodes"].get<int>();
  std::vector<std::pair<NodeId, NodeId>> edge_list;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      fail(Errc::ParseError, "each edge must be a [u, v] integer pair");
    }
    edge_list.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return from_edges(n, std::move(edge_list), /*require_connected=*/true);
}

std::string Graph::serialize() const {
  nlohmann::json doc;
  doc["nodes"] = node_count_;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : edges_) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

}  // namespace riskplan
