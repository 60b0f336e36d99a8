#pragma once

#include "fdheat/ledgers.hpp"
#include "fdheat/model.hpp"

#include <functional>

namespace fdheat::optim {

/// Explicit discrete cost J^h_i / J^h_{i,alpha} of the classical scheme,
/// with `control` substituted into the field selected by `problem`.
double discrete_cost(ControlProblem problem, BoundaryKind bc, const ProblemParams& params,
                     const Grid& grid, double control);

/// Closed-form minimizer of discrete_cost.
double discrete_optimal_control(ControlProblem problem, BoundaryKind bc,
                                const ProblemParams& params, const Grid& grid);

struct DiscreteOptimum {
  double control_star = 0.0;
  double cost_star = 0.0;
  PiecewiseLinearField state_star;
  Grid grid;
};

DiscreteOptimum discrete_optimum(ControlProblem problem, BoundaryKind bc,
                                 const ProblemParams& params, const Grid& grid);

/// Vertex of the parabola through (lo, mid, hi). Exact for quadratics.
/// Throws ComputationError if the samples are not strictly convex.
double numeric_argmin(const std::function<double(double)>& cost, double lo, double hi);

}  // namespace fdheat::optim
