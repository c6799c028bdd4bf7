#include "core/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace riskplan {

void validate_model(const Graph& g, const AdversaryModel& model) {
  if (model.count < 0) fail(Errc::InvalidArgument, "adversary count must be nonnegative");
  if (model.stay_prob < 0.0 || model.stay_prob > 1.0) {
    fail(Errc::InvalidArgument, "stay probability must lie in [0, 1]");
  }
  if (static_cast<int>(model.initial_edges.size()) != model.count) {
    fail(Errc::InvalidArgument, "initial_edges size must equal adversary count");
  }
  std::set<EdgeId> distinct;
  for (EdgeId e : model.initial_edges) {
    g.check_edge(e);
    if (!distinct.insert(e).second) {
      fail(Errc::InvalidArgument,
           "adversaries must start on pairwise distinct edges (edge " + std::to_string(e) + ")");
    }
  }
}

TransitionMatrix TransitionMatrix::build(const Graph& g, double stay_prob) {
  if (stay_prob < 0.0 || stay_prob > 1.0) {
    fail(Errc::InvalidArgument, "stay probability must lie in [0, 1]");
  }
  TransitionMatrix theta;
  theta.n_ = g.edge_count();
  theta.m_.assign(static_cast<size_t>(theta.n_) * theta.n_, 0.0);
  for (EdgeId e = 0; e < theta.n_; ++e) {
    const auto& adj = g.adjacent_edges(e);
    if (adj.empty()) {
      // No adjacent edge to move to: all mass stays, keeping the column stochastic.
      theta.m_[static_cast<size_t>(e) * theta.n_ + e] = 1.0;
      continue;
    }
    theta.m_[static_cast<size_t>(e) * theta.n_ + e] = stay_prob;
    const double move = (1.0 - stay_prob) / static_cast<double>(adj.size());
    for (EdgeId next : adj) {
      theta.m_[static_cast<size_t>(next) * theta.n_ + e] = move;
    }
  }
  return theta;
}

void TransitionMatrix::apply(std::span<const double> in, std::span<double> out) const {
  for (int next = 0; next < n_; ++next) {
    const double* row = &m_[static_cast<size_t>(next) * n_];
    double acc = 0.0;
    for (int cur = 0; cur < n_; ++cur) acc += row[cur] * in[cur];
    out[next] = acc;
  }
}

std::vector<double> TransitionMatrix::propagate(std::vector<double> q0, int steps) const {
  if (static_cast<int>(q0.size()) != n_) {
    fail(Errc::InvalidArgument, "distribution size does not match edge count");
  }
  if (steps < 0) fail(Errc::InvalidArgument, "step count must be nonnegative");
  std::vector<double> next(q0.size());
  for (int i = 0; i < steps; ++i) {
    apply(q0, next);
    q0.swap(next);
  }
  return q0;
}

std::vector<double> combine_union(const std::vector<std::vector<double>>& marginals) {
  if (marginals.empty()) return {};
  const size_t edges = marginals.front().size();
  std::vector<double> rho(edges, 0.0);
  for (size_t e = 0; e < edges; ++e) {
    double miss = 1.0;
    for (const auto& q : marginals) miss *= 1.0 - q[e];
    rho[e] = 1.0 - miss;
  }
  return rho;
}

double RiskForecast::cumulative_rho(EdgeId e) const {
  double total = 0.0;
  for (int t = 1; t <= horizon_; ++t) total += rho(t, e);
  return total;
}

RiskForecast forecast(const Graph& g, const AdversaryModel& model, int horizon) {
  if (horizon < 0) fail(Errc::InvalidArgument, "horizon must be nonnegative");
  validate_model(g, model);

  RiskForecast fc(horizon, g.edge_count(), model.count);
  if (g.edge_count() == 0) return fc;

  const TransitionMatrix theta = TransitionMatrix::build(g, model.stay_prob);
  for (int j = 0; j < model.count; ++j) {
    fc.mutable_marginal_row(j, 0)[model.initial_edges[j]] = 1.0;
    for (int t = 0; t < horizon; ++t) {
      theta.apply(fc.marginal_row(j, t), fc.mutable_marginal_row(j, t + 1));
    }
  }
  for (int t = 0; t <= horizon; ++t) {
    auto rho = fc.mutable_rho_row(t);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      double miss = 1.0;
      for (int j = 0; j < model.count; ++j) miss *= 1.0 - fc.marginal(j, t, e);
      rho[e] = 1.0 - miss;
    }
  }
  return fc;
}

AdversaryTrajectories sample_trajectories(const Graph& g, const AdversaryModel& model,
                                          const TransitionMatrix& theta, int horizon,
                                          uint64_t seed) {
  validate_model(g, model);
  if (theta.size() != g.edge_count()) {
    fail(Errc::InvalidArgument, "transition matrix does not match graph");
  }
  AdversaryTrajectories out;
  out.horizon = horizon;
  out.edges.resize(model.count);
  for (int j = 0; j < model.count; ++j) {
    RandomSource rng(mix_seed({seed, static_cast<uint64_t>(j)}));
    auto& seq = out.edges[j];
    seq.resize(horizon + 1);
    EdgeId cur = model.initial_edges[j];
    seq[0] = cur;
    for (int t = 1; t <= horizon; ++t) {
      // Inverse-CDF draw from Theta's column at cur: stay entry, then the
      // adjacent edges in ascending order.
      const double u = rng.next_double();
      double acc = theta.at(cur, cur);
      EdgeId next = cur;
      if (u >= acc) {
        const auto& adj = g.adjacent_edges(cur);
        for (EdgeId cand : adj) {
          acc += theta.at(cand, cur);
          next = cand;
          if (u < acc) break;
        }
      }
      cur = next;
      seq[t] = cur;
    }
  }
  return out;
}

namespace {

void enumerate_paths(const Graph& g, double stay_prob, EdgeId cur, int remaining, double prob,
                     std::vector<double>& out) {
  if (prob == 0.0) return;
  if (remaining == 0) {
    out[cur] += prob;
    return;
  }
  const auto& adj = g.adjacent_edges(cur);
  const double stay = adj.empty() ? 1.0 : stay_prob;
  enumerate_paths(g, stay_prob, cur, remaining - 1, prob * stay, out);
  if (!adj.empty()) {
    const double move = (1.0 - stay_prob) / static_cast<double>(adj.size());
    for (EdgeId next : adj) {
      enumerate_paths(g, stay_prob, next, remaining - 1, prob * move, out);
    }
  }
}

}  // namespace

std::vector<double> brute_force_marginal(const Graph& g, EdgeId initial_edge, double stay_prob,
                                         int steps) {
  g.check_edge(initial_edge);
  if (steps < 0) fail(Errc::InvalidArgument, "step count must be nonnegative");
  size_t max_branch = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    max_branch = std::max(max_branch, g.adjacent_edges(e).size() + 1);
  }
  double bound = 1.0;
  for (int i = 0; i < steps; ++i) {
    bound *= static_cast<double>(max_branch);
    if (bound > 1e6) {
      fail(Errc::LimitExceeded, "brute-force enumeration would exceed 1e6 paths");
    }
  }
  std::vector<double> out(g.edge_count(), 0.0);
  enumerate_paths(g, stay_prob, initial_edge, steps, 1.0, out);
  return out;
}

}  // namespace riskplan
