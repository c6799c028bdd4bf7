#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace riskplan {

// Stay-move adversaries. One global stay probability; movement is uniform
// over adjacent edges (edges sharing a node).
struct AdversaryModel {
  int count = 0;
  double stay_prob = 1.0;
  std::vector<EdgeId> initial_edges;  // pairwise distinct, size == count
};

// Edge-to-edge transition matrix, column-stochastic: at(next, cur) is
// Pr[next edge | current edge]. Dense storage; the experiment grid tops out
// at a few dozen edges.
class TransitionMatrix {
 public:
  static TransitionMatrix build(const Graph& g, double stay_prob);

  int size() const { return n_; }
  double at(EdgeId next, EdgeId cur) const { return m_[static_cast<size_t>(next) * n_ + cur]; }

  // out = Theta * in
  void apply(std::span<const double> in, std::span<double> out) const;
  std::vector<double> propagate(std::vector<double> q0, int steps) const;

 private:
  int n_ = 0;
  std::vector<double> m_;
};

// Per-adversary occupancy marginals q[j][t][e] and the combined union risk
// rho[t][e] over a fixed horizon. Immutable once built.
class RiskForecast {
 public:
  RiskForecast(int horizon, int edge_count, int adversary_count)
      : horizon_(horizon),
        edges_(edge_count),
        adversaries_(adversary_count),
        rho_(static_cast<size_t>(horizon + 1) * edge_count, 0.0),
        marginals_(static_cast<size_t>(adversary_count) * (horizon + 1) * edge_count, 0.0) {}

  int horizon() const { return horizon_; }
  int edge_count() const { return edges_; }
  int adversary_count() const { return adversaries_; }

  double rho(int t, EdgeId e) const { return rho_[static_cast<size_t>(t) * edges_ + e]; }
  std::span<const double> rho_row(int t) const {
    return {&rho_[static_cast<size_t>(t) * edges_], static_cast<size_t>(edges_)};
  }
  double marginal(int j, int t, EdgeId e) const {
    return marginals_[(static_cast<size_t>(j) * (horizon_ + 1) + t) * edges_ + e];
  }
  std::span<const double> marginal_row(int j, int t) const {
    return {&marginals_[(static_cast<size_t>(j) * (horizon_ + 1) + t) * edges_],
            static_cast<size_t>(edges_)};
  }

  // Sum of rho over t = 1..T, the cumulative exposure used by support scoring.
  double cumulative_rho(EdgeId e) const;

  std::span<double> mutable_rho_row(int t) {
    return {&rho_[static_cast<size_t>(t) * edges_], static_cast<size_t>(edges_)};
  }
  std::span<double> mutable_marginal_row(int j, int t) {
    return {&marginals_[(static_cast<size_t>(j) * (horizon_ + 1) + t) * edges_],
            static_cast<size_t>(edges_)};
  }

 private:
  int horizon_;
  int edges_;
  int adversaries_;
  std::vector<double> rho_;
  std::vector<double> marginals_;
};

// rho[e] = 1 - prod_j (1 - q_j[e]); the union of independent occupancy events.
std::vector<double> combine_union(const std::vector<std::vector<double>>& marginals);

// Full pipeline: delta marginals at the initial edges, propagated T steps,
// combined into union risk per time step.
RiskForecast forecast(const Graph& g, const AdversaryModel& model, int horizon);

// Sampled stay-move trajectories; edges[j][t] for t = 0..horizon.
struct AdversaryTrajectories {
  int horizon = 0;
  std::vector<std::vector<EdgeId>> edges;
};

AdversaryTrajectories sample_trajectories(const Graph& g, const AdversaryModel& model,
                                          const TransitionMatrix& theta, int horizon,
                                          uint64_t seed);

// Exact single-adversary marginal by enumerating every length-steps edge
// sequence. Test oracle for the matrix propagation; guarded against blowup.
std::vector<double> brute_force_marginal(const Graph& g, EdgeId initial_edge, double stay_prob,
                                         int steps);

void validate_model(const Graph& g, const AdversaryModel& model);

}  // namespace riskplan
