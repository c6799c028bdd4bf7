#include "core/support.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace riskplan {

void SupportConfig::validate() const {
  if (hop_radius < 0) fail(Errc::InvalidArgument, "support hop radius k must be nonnegative");
  if (supports_per_edge < 1) fail(Errc::InvalidArgument, "supports per edge s must be >= 1");
  if (alpha <= 0.0) fail(Errc::InvalidArgument, "alpha must be positive");
  if (beta < 0.0) fail(Errc::InvalidArgument, "beta must be nonnegative");
}

bool SupportMap::contains(EdgeId e, NodeId x) const {
  auto it = nodes.find(e);
  if (it == nodes.end()) return false;
  return std::find(it->second.begin(), it->second.end(), x) != it->second.end();
}

std::vector<EdgeId> risky_edge_set(const RiskForecast& fc, double eps) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < fc.edge_count(); ++e) {
    for (int t = 0; t <= fc.horizon(); ++t) {
      if (fc.rho(t, e) > eps) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

bool covers(const Graph& g, NodeId x, EdgeId e, int radius) {
  auto [u, v] = g.endpoints(e);
  return std::min(g.hop_distance(x, u), g.hop_distance(x, v)) <= radius;
}

std::vector<NodeId> candidate_nodes(const Graph& g, EdgeId edge, const SupportConfig& config) {
  g.check_edge(edge);
  auto [u, v] = g.endpoints(edge);
  std::vector<NodeId> out;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    const int d = std::min(g.hop_distance(x, u), g.hop_distance(x, v));
    if (d >= 0 && d <= config.hop_radius && covers(g, x, edge, config.effective_coverage_radius())) {
      out.push_back(x);
    }
  }
  return out;
}

PathOverlap path_overlap(const Graph& g, const std::vector<Task>& tasks) {
  PathOverlap overlap;
  overlap.raw.assign(g.node_count(), 0);
  for (const Task& task : tasks) {
    for (NodeId x : g.canonical_shortest_path(task.start, task.goal)) {
      overlap.raw[x] += 1;
    }
  }
  const int max_count = overlap.raw.empty()
                            ? 0
                            : *std::max_element(overlap.raw.begin(), overlap.raw.end());
  overlap.normalized.assign(g.node_count(), 0.0);
  if (max_count > 0) {
    for (NodeId x = 0; x < g.node_count(); ++x) {
      overlap.normalized[x] = static_cast<double>(overlap.raw[x]) / max_count;
    }
  }
  return overlap;
}

double risk_potential(const RiskForecast& fc, const Graph& g, EdgeId edge, NodeId x) {
  auto [u, v] = g.endpoints(edge);
  const int d = std::min(g.hop_distance(x, u), g.hop_distance(x, v));
  return fc.cumulative_rho(edge) / (1.0 + d);
}

std::vector<ScoreBreakdown> score_candidates(const Graph& g, EdgeId edge,
                                             std::span<const NodeId> candidates,
                                             const PathOverlap& overlap, const RiskForecast& fc,
                                             const SupportConfig& config) {
  std::vector<ScoreBreakdown> out;
  out.reserve(candidates.size());
  if (candidates.empty()) return out;

  double max_raw = -1.0;
  for (NodeId x : candidates) {
    ScoreBreakdown entry;
    entry.node = x;
    entry.path_overlap = overlap.normalized.empty() ? 0.0 : overlap.normalized[x];
    entry.risk_raw = risk_potential(fc, g, edge, x);
    max_raw = std::max(max_raw, entry.risk_raw);
    out.push_back(entry);
  }
  double denom = 0.0;
  for (auto& entry : out) denom += std::exp(entry.risk_raw - max_raw);
  for (auto& entry : out) entry.risk_softmax = std::exp(entry.risk_raw - max_raw) / denom;

  auto [u, v] = g.endpoints(edge);
  for (auto& entry : out) {
    switch (config.variant) {
      case ScoreVariant::RiskPath:
        entry.score = config.alpha * entry.path_overlap * (1.0 + config.beta * entry.risk_softmax);
        break;
      case ScoreVariant::RiskOnly:
        entry.score = entry.risk_softmax;
        break;
      case ScoreVariant::PathOnly:
        entry.score = entry.path_overlap;
        break;
      case ScoreVariant::DetourOnly: {
        const int d = std::min(g.hop_distance(entry.node, u), g.hop_distance(entry.node, v));
        entry.score = 1.0 / (1.0 + d);
        break;
      }
    }
  }
  return out;
}

namespace {

// Top-s selection: score descending, node index ascending on ties.
void select_top(const std::vector<ScoreBreakdown>& breakdown, int s, std::vector<NodeId>& nodes,
                std::vector<double>& scores) {
  std::vector<const ScoreBreakdown*> order;
  order.reserve(breakdown.size());
  for (const auto& entry : breakdown) order.push_back(&entry);
  std::sort(order.begin(), order.end(), [](const ScoreBreakdown* a, const ScoreBreakdown* b) {
    if (a->score != b->score) return a->score > b->score;
    return a->node < b->node;
  });
  const int take = std::min<int>(s, static_cast<int>(order.size()));
  for (int i = 0; i < take; ++i) {
    nodes.push_back(order[i]->node);
    scores.push_back(order[i]->score);
  }
}

SupportMap allocate_scored(const Graph& g, const RiskForecast& fc, const std::vector<Task>& tasks,
                           const SupportConfig& config, const std::vector<EdgeId>& edges) {
  SupportMap gamma;
  const PathOverlap overlap = path_overlap(g, tasks);
  for (EdgeId e : edges) {
    const std::vector<NodeId> candidates = candidate_nodes(g, e, config);
    if (candidates.empty()) continue;
    const auto breakdown = score_candidates(g, e, candidates, overlap, fc, config);
    std::vector<NodeId> nodes;
    std::vector<double> scores;
    select_top(breakdown, config.supports_per_edge, nodes, scores);
    gamma.nodes[e] = std::move(nodes);
    gamma.scores[e] = std::move(scores);
  }
  return gamma;
}

}  // namespace

SupportMap allocate(const Graph& g, const RiskForecast& fc, const std::vector<Task>& tasks,
                    const SupportConfig& config) {
  config.validate();
  return allocate_scored(g, fc, tasks, config, risky_edge_set(fc));
}

SupportMap allocate_baseline(const Graph& g, const RiskForecast& fc,
                             const std::vector<Task>& tasks, const SupportConfig& config,
                             AllocatorKind kind, uint64_t seed) {
  config.validate();
  switch (kind) {
    case AllocatorKind::None:
      return {};
    case AllocatorKind::ForecastAware:
      return allocate(g, fc, tasks, config);
    case AllocatorKind::Tcgre: {
      // Only edges risky in the initial snapshot; same scoring machinery.
      std::vector<EdgeId> initial;
      for (EdgeId e = 0; e < fc.edge_count(); ++e) {
        if (fc.rho(0, e) > 1e-9) initial.push_back(e);
      }
      return allocate_scored(g, fc, tasks, config, initial);
    }
    case AllocatorKind::Random: {
      SupportMap gamma;
      RandomSource rng(seed);
      for (EdgeId e : risky_edge_set(fc)) {
        const std::vector<NodeId> candidates = candidate_nodes(g, e, config);
        if (candidates.empty()) continue;
        const int take = std::min<int>(config.supports_per_edge,
                                       static_cast<int>(candidates.size()));
        std::vector<int> picks =
            rng.sample_distinct(static_cast<int>(candidates.size()), take);
        std::vector<NodeId> nodes;
        for (int idx : picks) nodes.push_back(candidates[idx]);
        std::sort(nodes.begin(), nodes.end());
        gamma.nodes[e] = std::move(nodes);
        gamma.scores[e] = std::vector<double>(take, 0.0);
      }
      return gamma;
    }
  }
  fail(Errc::InvalidArgument, "unknown allocator kind");
}

}  // namespace riskplan
