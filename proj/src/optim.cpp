#include "fdheat/optim.hpp"

#include "fdheat/analytic.hpp"
#include "fdheat/fdm.hpp"

#include <cmath>

namespace fdheat::optim {

namespace {

// Each correction below is the J^h - J polynomial, multiplied
// through by q where the source-control form divides by it.

double source_correction(BoundaryKind bc, const ProblemParams& p, double h) {
  const double x0 = p.x0, g = p.g, q = p.q;
  const double bz = p.b - p.z_d;
  const double r = h / x0;
  if (bc == BoundaryKind::Dirichlet) {
    return 0.5 * x0 * x0 * x0 * p.y0 *
           (g * g * x0 * x0 * (r * r * r * r / 180.0 + r * r * r / 24.0 + r * r / 36.0 - 5.0 * r / 24.0) +
            g * q * x0 * r * (1.0 / 3.0 + r / 12.0) - g * bz * r * (0.5 + r / 6.0));
  }
  const double ax = require_alpha(p) * x0;
  const double ax2 = ax * ax;
  const double gterm = -5.0 / 24.0 + r / 36.0 + r * r / 24.0 + r * r * r / 180.0 +
                       (-7.0 / 6.0 + r / 3.0 + r * r / 6.0) / ax + (-2.0 + r) / ax2;
  const double qterm = 1.0 / 3.0 + r / 12.0 + (1.5 + r / 6.0) / ax + 2.0 / ax2;
  const double bterm = -0.5 - r / 6.0 - 2.0 / ax;
  return 0.5 * x0 * x0 * x0 * p.y0 * g * h * (g * x0 * gterm + q * qterm + bz / x0 * bterm);
}

double flux_correction(BoundaryKind bc, const ProblemParams& p, double h) {
  const double x0 = p.x0, g = p.g, q = p.q;
  const double bz = p.b - p.z_d;
  if (bc == BoundaryKind::Dirichlet) {
    return 0.5 * x0 * p.y0 *
           (h * g * x0 * (q * x0 / 3.0 - 5.0 / 24.0 * g * x0 * x0 - bz / 2.0) +
            h * h * g * (x0 * x0 * g / 36.0 - bz / 6.0 + q * x0 / 12.0) +
            h * h * h * g * g * x0 / 24.0 + h * h * h * h * g * g / 180.0);
  }
  const double a = require_alpha(p);
  const double t0 = q * x0 * x0 / 3.0 - 5.0 * g * x0 * x0 * x0 / 24.0 - bz * x0 / 2.0 +
                    3.0 * x0 * q / (2.0 * a) - 7.0 * g * x0 * x0 / (6.0 * a) - 2.0 * bz / a +
                    2.0 * (q - g * x0) / (a * a);
  const double t1 = x0 * x0 * g / 36.0 - bz / 6.0 + q * x0 / 12.0 + (2.0 * g * x0 + q) / (6.0 * a) +
                    g / (a * a);
  const double t2 = g * (x0 / 24.0 + 1.0 / (6.0 * a));
  const double t3 = g / 180.0;
  return 0.5 * x0 * p.y0 * g * h * (t0 + h * (t1 + h * (t2 + h * t3)));
}

double ambient_correction(BoundaryKind bc, const ProblemParams& p, double h) {
  const double x0 = p.x0, g = p.g, q = p.q, b = p.b, zd = p.z_d;
  if (bc == BoundaryKind::Dirichlet) {
    return 0.5 * x0 * p.y0 * g *
           (-b * h * (x0 / 2.0 + h / 6.0) +
            h * x0 * (q * x0 / 3.0 - 5.0 / 24.0 * g * x0 * x0 + zd / 2.0) +
            h * h / 6.0 * (q * x0 / 2.0 + g * x0 * x0 / 6.0 + zd) + g * h * h * h * x0 / 24.0 +
            g * h * h * h * h / 180.0);
  }
  const double a = require_alpha(p);
  const double t0 = -b * (x0 / 2.0 + 2.0 / a + h / 6.0) +
                    g * (-5.0 * x0 * x0 * x0 / 24.0 - 7.0 * x0 * x0 / (6.0 * a) - 2.0 * x0 / (a * a)) +
                    q * (x0 * x0 / 3.0 + 3.0 * x0 / (2.0 * a) + 2.0 / (a * a)) + zd * (x0 / 2.0 + 2.0 / a);
  const double t1 = g * (x0 * x0 / 36.0 + x0 / (3.0 * a) + 1.0 / (a * a)) +
                    q * (x0 / 12.0 + 1.0 / (6.0 * a)) + zd / 6.0;
  const double t2 = g * (x0 / 24.0 + 1.0 / (6.0 * a));
  const double t3 = g / 180.0;
  return 0.5 * x0 * p.y0 * g * h * (t0 + h * (t1 + h * (t2 + h * t3)));
}

}  // namespace

double discrete_cost(ControlProblem problem, BoundaryKind bc, const ProblemParams& params,
                     const Grid& grid, double control) {
  const ProblemParams p = with_control(params, problem, control);
  validate(p, bc);
  if (grid.x0() != p.x0) throw InvalidArgument("grid extent does not match x0");
  const double h = grid.h();
  const double base = analytic::continuous_cost(problem, bc, p, control);
  switch (problem) {
    case ControlProblem::SourceG: return base + source_correction(bc, p, h);
    case ControlProblem::FluxQ: return base + flux_correction(bc, p, h);
    case ControlProblem::AmbientB: return base + ambient_correction(bc, p, h);
  }
  return base;
}

double discrete_optimal_control(ControlProblem problem, BoundaryKind bc, const ProblemParams& p,
                                const Grid& grid) {
  validate(p, bc);
  if (grid.x0() != p.x0) throw InvalidArgument("grid extent does not match x0");
  const double x0 = p.x0;
  const double h = grid.h();
  const double r = h / x0;
  switch (problem) {
    case ControlProblem::SourceG: {
      const auto a = coeff_ledger_g(p, bc);
      return (a.qa1 + r * a.qa2 + r * r * a.qa3) / (3.0 * x0 * (a.a4 + a.a5(h)));
    }
    case ControlProblem::FluxQ: {
      const auto c = coeff_ledger_q(p, bc);
      const double qop = analytic::continuous_optimal_control(problem, bc, p);
      return qop - c.b1 * p.g * h / 6.0 - c.b2 * p.g * h * h / (24.0 * x0);
    }
    case ControlProblem::AmbientB: {
      const double e1 = coeff_ledger_b(p).e1;
      const double bop = analytic::continuous_optimal_control(problem, bc, p);
      const double robin = bc == BoundaryKind::Robin ? 4.0 / (require_alpha(p) * x0) : 0.0;
      return bop + e1 * p.g * x0 * h * (1.0 + robin + h / (3.0 * x0));
    }
  }
  return 0.0;
}

DiscreteOptimum discrete_optimum(ControlProblem problem, BoundaryKind bc,
                                 const ProblemParams& params, const Grid& grid) {
  const double c = discrete_optimal_control(problem, bc, params, grid);
  const ProblemParams p = with_control(params, problem, c);
  const auto nodal = fdm::explicit_nodal_solution(p, grid, SchemeKind::Classical, bc);
  return DiscreteOptimum{c, discrete_cost(problem, bc, params, grid, c), fdm::interpolate(nodal),
                         grid};
}

double numeric_argmin(const std::function<double(double)>& cost, double lo, double hi) {
  if (!(hi > lo)) throw InvalidArgument("empty bracket");
  const double half = 0.5 * (hi - lo);
  const double mid = lo + half;
  const double f0 = cost(lo), f1 = cost(mid), f2 = cost(hi);
  const double second = f0 - 2.0 * f1 + f2;
  if (!(second > 0.0)) throw ComputationError("samples are not strictly convex");
  return mid - half * (f2 - f0) / (2.0 * second);
}

}  // namespace fdheat::optim
