#include "fdheat/model.hpp"

#include <algorithm>
#include <cmath>

namespace fdheat {

std::string_view to_string(SchemeKind s) {
  return s == SchemeKind::Classical ? "classical" : "improved";
}

std::string_view to_string(BoundaryKind b) {
  return b == BoundaryKind::Dirichlet ? "dirichlet" : "robin";
}

std::string_view to_string(ControlProblem p) {
  switch (p) {
    case ControlProblem::SourceG: return "g";
    case ControlProblem::FluxQ: return "q";
    case ControlProblem::AmbientB: return "b";
  }
  return "?";
}

SchemeKind parse_scheme(std::string_view s) {
  if (s == "classical") return SchemeKind::Classical;
  if (s == "improved") return SchemeKind::Improved;
  throw InvalidArgument("unknown scheme '" + std::string(s) + "'");
}

BoundaryKind parse_boundary(std::string_view s) {
  if (s == "dirichlet") return BoundaryKind::Dirichlet;
  if (s == "robin") return BoundaryKind::Robin;
  throw InvalidArgument("unknown boundary kind '" + std::string(s) + "'");
}

ControlProblem parse_problem(std::string_view s) {
  if (s == "g") return ControlProblem::SourceG;
  if (s == "q") return ControlProblem::FluxQ;
  if (s == "b") return ControlProblem::AmbientB;
  throw InvalidArgument("unknown control problem '" + std::string(s) + "'");
}

const ProblemParams& validate(const ProblemParams& p, BoundaryKind bc) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(p.x0 > 0.0) || !finite(p.x0)) throw InvalidArgument("x0 must be positive");
  if (!(p.y0 > 0.0) || !finite(p.y0)) throw InvalidArgument("y0 must be positive");
  if (!finite(p.g) || !finite(p.q) || !finite(p.b) || !finite(p.z_d))
    throw InvalidArgument("g, q, b and z_d must be finite");
  if (!(p.m1 > 0.0)) throw InvalidArgument("m1 must be positive");
  if (!(p.m2 > 0.0)) throw InvalidArgument("m2 must be positive");
  if (!(p.m3 > 0.0)) throw InvalidArgument("m3 must be positive");
  if (bc == BoundaryKind::Robin) require_alpha(p);
  return p;
}

double require_alpha(const ProblemParams& p) {
  if (!p.alpha) throw InvalidArgument("alpha required");
  if (!(*p.alpha > 0.0) || !std::isfinite(*p.alpha))
    throw InvalidArgument("alpha must be positive");
  return *p.alpha;
}

ProblemParams with_control(ProblemParams params, ControlProblem problem, double value) {
  switch (problem) {
    case ControlProblem::SourceG: params.g = value; break;
    case ControlProblem::FluxQ: params.q = value; break;
    case ControlProblem::AmbientB: params.b = value; break;
  }
  return params;
}

double control_of(const ProblemParams& params, ControlProblem problem) {
  switch (problem) {
    case ControlProblem::SourceG: return params.g;
    case ControlProblem::FluxQ: return params.q;
    case ControlProblem::AmbientB: return params.b;
  }
  return 0.0;
}

Grid::Grid(double x0, int n) : x0_(x0), n_(n), h_(0.0) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw InvalidArgument("x0 must be positive");
  // The three-point boundary stencils need an interior neighbour on each side.
  if (n < 2) throw InvalidArgument("n must be at least 2");
  h_ = x0 / n;
}

Eigen::VectorXd Grid::nodes() const {
  Eigen::VectorXd xs(node_count());
  for (int i = 1; i <= n_ + 1; ++i) xs(i - 1) = x(i);
  return xs;
}

Grid make_grid(double x0, int n) { return Grid(x0, n); }

PiecewiseLinearField::PiecewiseLinearField(Grid grid, Eigen::VectorXd values, double y0)
    : grid_(grid), values_(std::move(values)), y0_(y0) {
  if (static_cast<std::size_t>(values_.size()) != grid_.node_count())
    throw InvalidArgument("nodal value count must be n+1");
  if (!(y0 > 0.0)) throw InvalidArgument("y0 must be positive");
}

double PiecewiseLinearField::operator()(double x) const {
  const int n = grid_.n();
  const double h = grid_.h();
  int i = static_cast<int>(std::floor(x / h)) + 1;
  i = std::clamp(i, 1, n);
  const double xl = grid_.x(i);
  const double xr = grid_.x(i + 1);
  if (x == xl) return values_(i - 1);
  if (x == xr) return values_(i);
  const double t = (x - xl) / (xr - xl);
  return (1.0 - t) * values_(i - 1) + t * values_(i);
}

double PiecewiseLinearField::slope(int i) const {
  if (i < 1 || i > grid_.n()) throw InvalidArgument("segment index out of range");
  return (values_(i) - values_(i - 1)) / (grid_.x(i + 1) - grid_.x(i));
}

}  // namespace fdheat
