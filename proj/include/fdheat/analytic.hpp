#pragma once

#include "fdheat/model.hpp"

namespace fdheat::analytic {

/// Exact y-independent solution of the Dirichlet or Robin system.
QuadraticState continuous_state(const ProblemParams& params, BoundaryKind bc);

/// Explicit quadratic cost J_i / J_{i,alpha} evaluated at `control`, which
/// replaces the field of `params` selected by `problem`.
double continuous_cost(ControlProblem problem, BoundaryKind bc,
                       const ProblemParams& params, double control);

struct ContinuousOptimum {
  double control_star = 0.0;
  double cost_star = 0.0;
  QuadraticState state_star;
};

/// Closed-form minimizer of continuous_cost.
double continuous_optimal_control(ControlProblem problem, BoundaryKind bc,
                                  const ProblemParams& params);

ContinuousOptimum continuous_optimum(ControlProblem problem, BoundaryKind bc,
                                     const ProblemParams& params);

}  // namespace fdheat::analytic
