#include "fdheat/analytic.hpp"

#include "fdheat/ledgers.hpp"

namespace fdheat::analytic {

QuadraticState continuous_state(const ProblemParams& p, BoundaryKind bc) {
  validate(p, bc);
  QuadraticState u{-0.5 * p.g, p.g * p.x0 - p.q, p.b};
  if (bc == BoundaryKind::Robin) u.c0 += (p.g * p.x0 - p.q) / require_alpha(p);
  return u;
}

namespace {

// The source-control cost is naturally written in powers of g x0 / q; it is expanded
// here so that q = 0 stays finite.
double cost_source(BoundaryKind bc, const ProblemParams& p) {
  const double x0 = p.x0, y0 = p.y0, g = p.g, q = p.q;
  const double bz = p.b - p.z_d;
  const double a4 = 2.0 / 15.0 + p.m1 / (x0 * x0 * x0 * x0);
  double j = 0.5 * x0 * x0 * x0 * y0 *
             (g * g * x0 * x0 * a4 - 5.0 / 12.0 * g * q * x0 + 2.0 / 3.0 * g * bz + q * q / 3.0 -
              q * bz / x0 + bz * bz / (x0 * x0));
  if (bc == BoundaryKind::Robin) {
    const double alpha = require_alpha(p);
    const double ax = alpha * x0;
    j += x0 * x0 * y0 / (2.0 * alpha) *
         (g * g * x0 * x0 * (2.0 / 3.0 + 1.0 / ax) + g * x0 * q * (-5.0 / 3.0 - 2.0 / ax) +
          2.0 * g * bz + q * q * (1.0 + 1.0 / ax) - 2.0 * q * bz / x0);
  }
  return j;
}

double cost_flux(BoundaryKind bc, const ProblemParams& p) {
  const auto d = coeff_ledger_q(p, bc);
  const double x0 = p.x0, g = p.g, q = p.q;
  const double bz = p.b - p.z_d;
  const double x02 = x0 * x0;
  return 0.5 * x0 * p.y0 *
         (q * q * x02 * (d.d1 + p.m2 / (x02 * x0)) + q * x0 * (d.d2 * g * x02 + d.d3 * bz) +
          d.d4 * g * g * x02 * x02 + d.d5 * bz * bz + d.d6 * g * x02 * bz);
}

double cost_ambient(BoundaryKind bc, const ProblemParams& p) {
  const double x0 = p.x0, y0 = p.y0, g = p.g, q = p.q, b = p.b, zd = p.z_d;
  const double x02 = x0 * x0;
  double j = 0.5 * x0 * y0 *
             (b * b * (1.0 + p.m3 / x0) + b * (2.0 * g * x02 / 3.0 - q * x0 - 2.0 * zd) +
              (2.0 * g * g * x02 * x02 / 15.0 - 5.0 * g * q * x02 * x0 / 12.0 +
               x02 / 3.0 * (q * q - 2.0 * g * zd) + zd * (zd + q * x0)));
  if (bc == BoundaryKind::Robin) {
    const double alpha = require_alpha(p);
    const double s = q - g * x0;
    j += 0.5 * x0 * y0 *
         (s * (-6.0 * b + 3.0 * q * x0 - 2.0 * g * x02 + 6.0 * zd) / (3.0 * alpha) +
          s * s / (alpha * alpha));
  }
  return j;
}

}  // namespace

double continuous_cost(ControlProblem problem, BoundaryKind bc, const ProblemParams& params,
                       double control) {
  const ProblemParams p = with_control(params, problem, control);
  validate(p, bc);
  switch (problem) {
    case ControlProblem::SourceG: return cost_source(bc, p);
    case ControlProblem::FluxQ: return cost_flux(bc, p);
    case ControlProblem::AmbientB: return cost_ambient(bc, p);
  }
  return 0.0;
}

double continuous_optimal_control(ControlProblem problem, BoundaryKind bc,
                                  const ProblemParams& p) {
  validate(p, bc);
  const double x0 = p.x0;
  switch (problem) {
    case ControlProblem::SourceG: {
      const auto a = coeff_ledger_g(p, bc);
      return a.qa1 / (3.0 * x0 * a.a4);
    }
    case ControlProblem::FluxQ: {
      const auto d = coeff_ledger_q(p, bc);
      return -(d.d2 * p.g * x0 * x0 + d.d3 * (p.b - p.z_d)) /
             (2.0 * x0 * (d.d1 + p.m2 / (x0 * x0 * x0)));
    }
    case ControlProblem::AmbientB: {
      const double denom = 1.0 + p.m3 / x0;
      double b = (-p.g * x0 * x0 / 3.0 + p.q * x0 / 2.0 + p.z_d) / denom;
      if (bc == BoundaryKind::Robin) b -= (p.g * x0 - p.q) / (require_alpha(p) * denom);
      return b;
    }
  }
  return 0.0;
}

ContinuousOptimum continuous_optimum(ControlProblem problem, BoundaryKind bc,
                                     const ProblemParams& params) {
  ContinuousOptimum opt;
  opt.control_star = continuous_optimal_control(problem, bc, params);
  opt.cost_star = continuous_cost(problem, bc, params, opt.control_star);
  opt.state_star = continuous_state(with_control(params, problem, opt.control_star), bc);
  return opt;
}

}  // namespace fdheat::analytic
