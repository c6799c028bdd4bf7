#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/forecast.hpp"
#include "core/graph.hpp"
#include "core/support.hpp"
#include "core/types.hpp"

namespace riskplan {

struct RobotAction {
  enum class Kind : uint8_t { Wait = 0, Move = 1, Support = 2, Done = 3 };
  Kind kind = Kind::Wait;
  int arg = -1;  // Move: destination node; Support: covered edge; else unused

  bool operator==(const RobotAction&) const = default;
};

// Joint search state. Robots are absorbed once they reach their goal: done
// robots sit at the goal, emit Done actions and incur no further cost.
struct JointState {
  int t = 0;
  std::vector<NodeId> positions;
  std::vector<uint8_t> done;

  bool all_done() const;
};

struct Plan {
  std::vector<std::vector<RobotAction>> actions;  // [robot][step], makespan entries each
  int makespan = 0;
  double expected_cost = 0.0;
  std::vector<double> step_costs;                          // per joint step
  std::vector<std::pair<EdgeId, int>> support_activations; // sorted (edge, t)
  std::vector<NodeId> starts;                              // replay anchor
};

enum class PlanStatus { Solved, Infeasible, Timeout };

struct PlanOutcome {
  PlanStatus status = PlanStatus::Infeasible;
  Plan plan;
  double elapsed_s = 0.0;
};

// Expected traversal cost of an edge at time t: r_a + r_p * rho * (1 - supported).
double expected_move_cost(const RiskForecast& fc, EdgeId edge, int t, bool supported,
                          const CostParams& params);

struct JointSuccessor {
  std::vector<RobotAction> actions;
  JointState state;
  double cost = 0.0;
};

// All feasible joint steps out of a state, in lexicographic action order.
// A Support(e) is offered only where the robot stands on an allocated node of
// e, and is valid only if another robot moves across e in the same step.
std::vector<JointSuccessor> joint_successors(const JointState& state, const Graph& g,
                                             const SupportMap& gamma, const RiskForecast& fc,
                                             const CostParams& params,
                                             const std::vector<Task>& tasks, int horizon);

// Risk-blind admissible heuristic: remaining hops times base cost, summed
// over robots still en route.
double heuristic(const JointState& state, const Graph& g, const std::vector<Task>& tasks,
                 const CostParams& params);

struct SearchStats {
  long expanded = 0;
  long generated = 0;
  bool record_states = false;
  std::vector<JointState> expanded_states;
};

// Optimal joint plan over the time-expanded graph, minimizing expected team
// cost with makespan <= horizon. Risk terms are looked up lazily as edges are
// generated. Ties: lower f, then higher g, then lexicographic joint action.
PlanOutcome plan_lazy_astar(const Graph& g, const RiskForecast& fc, const SupportMap& gamma,
                            const std::vector<Task>& tasks, const CostParams& params, int horizon,
                            double timeout_s = 90.0, SearchStats* stats = nullptr);

// Optimality oracle: uniform-cost search over the fully expanded joint graph
// (costs pre-tabulated, no heuristic). Guarded against state-space blowup.
PlanOutcome exhaustive_plan(const Graph& g, const RiskForecast& fc, const SupportMap& gamma,
                            const std::vector<Task>& tasks, const CostParams& params, int horizon);

// Optimal cost-to-go from an arbitrary state under the same dynamics; nullopt
// when no completion exists within the horizon.
std::optional<double> exhaustive_cost_from(const Graph& g, const RiskForecast& fc,
                                           const SupportMap& gamma, const std::vector<Task>& tasks,
                                           const CostParams& params, int horizon,
                                           const JointState& from);

struct ValidationReport {
  bool ok = true;
  std::string violation;
};

// Replays a plan against the feasibility rules: move adjacency, support
// simultaneity and Gamma membership, goal arrival, makespan bound.
ValidationReport validate_plan(const Plan& plan, const Graph& g, const SupportMap& gamma,
                               const std::vector<Task>& tasks, int horizon);

}  // namespace riskplan
