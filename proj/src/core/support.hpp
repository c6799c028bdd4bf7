#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "core/forecast.hpp"
#include "core/graph.hpp"
#include "core/types.hpp"

namespace riskplan {

enum class ScoreVariant { RiskPath, RiskOnly, PathOnly, DetourOnly };
enum class AllocatorKind { ForecastAware, Random, Tcgre, None };

struct SupportConfig {
  int hop_radius = 2;         // k: candidate locality around a risky edge
  int supports_per_edge = 1;  // s
  double alpha = 1.0;
  double beta = 1.0;
  ScoreVariant variant = ScoreVariant::RiskPath;
  int coverage_radius = -1;  // radius defining S(x); -1 means same as hop_radius

  int effective_coverage_radius() const { return coverage_radius < 0 ? hop_radius : coverage_radius; }
  void validate() const;
};

struct ScoreBreakdown {
  NodeId node = -1;
  double path_overlap = 0.0;  // P-hat, in [0, 1]
  double risk_softmax = 0.0;  // R-hat, softmax over the edge's candidate set
  double risk_raw = 0.0;      // cumulative risk discounted by endpoint distance
  double score = 0.0;
};

// Gamma: per risky edge, the chosen support nodes (up to s) and their scores.
struct SupportMap {
  std::map<EdgeId, std::vector<NodeId>> nodes;
  std::map<EdgeId, std::vector<double>> scores;  // aligned with nodes

  bool empty() const { return nodes.empty(); }
  bool contains(EdgeId e, NodeId x) const;
};

// Edges with forecasted risk above eps anywhere in the horizon (E_diff). Sorted.
std::vector<EdgeId> risky_edge_set(const RiskForecast& fc, double eps = 1e-9);

// Whether edge e belongs to S(x): its nearer endpoint lies within radius hops of x.
bool covers(const Graph& g, NodeId x, EdgeId e, int radius);

// Candidate support nodes for an edge: cover it and sit within k hops of the
// nearer endpoint. Sorted ascending.
std::vector<NodeId> candidate_nodes(const Graph& g, EdgeId edge, const SupportConfig& config);

struct PathOverlap {
  std::vector<int> raw;          // P(x): robots whose canonical path visits x
  std::vector<double> normalized;  // P-hat(x) = P(x) / max_y P(y)
};

PathOverlap path_overlap(const Graph& g, const std::vector<Task>& tasks);

// R(x) = (sum_{t=1..T} rho_e(t)) / (1 + min(d(x,u), d(x,v))).
double risk_potential(const RiskForecast& fc, const Graph& g, EdgeId edge, NodeId x);

// Scores for one edge's candidate set under the configured variant. Softmax
// over risk potentials uses max-subtraction; R-hat sums to 1 per edge.
std::vector<ScoreBreakdown> score_candidates(const Graph& g, EdgeId edge,
                                             std::span<const NodeId> candidates,
                                             const PathOverlap& overlap, const RiskForecast& fc,
                                             const SupportConfig& config);

// Forecast-aware allocation: top-s candidates by score per risky edge,
// ties broken by lower node index.
SupportMap allocate(const Graph& g, const RiskForecast& fc, const std::vector<Task>& tasks,
                    const SupportConfig& config);

// Baselines. Random draws s candidates uniformly per risky edge (deterministic
// per seed); Tcgre runs the forecast-aware scoring restricted to edges already
// risky at t = 0; None allocates nothing.
SupportMap allocate_baseline(const Graph& g, const RiskForecast& fc,
                             const std::vector<Task>& tasks, const SupportConfig& config,
                             AllocatorKind kind, uint64_t seed);

}  // namespace riskplan
