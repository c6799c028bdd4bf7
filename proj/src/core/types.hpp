#pragma once

namespace riskplan {

using NodeId = int;
using EdgeId = int;

// One robot's start/goal assignment.
struct Task {
  NodeId start = 0;
  NodeId goal = 0;
};

struct CostParams {
  double base_move = 1.0;          // r_a
  double adversary_penalty = 10.0; // r_p
  double wait = 0.1;               // w
  double support = 0.1;            // s_cost
};

}  // namespace riskplan
