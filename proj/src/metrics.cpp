#include "fdheat/metrics.hpp"

#include "fdheat/analytic.hpp"
#include "fdheat/fdm.hpp"
#include "fdheat/optim.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

namespace fdheat::metrics {

PiecewisePolynomial::PiecewisePolynomial(Eigen::VectorXd breaks, std::vector<Coeffs> pieces,
                                         double y0)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), y0_(y0) {
  if (breaks_.size() < 2 || static_cast<std::size_t>(breaks_.size() - 1) != pieces_.size())
    throw InvalidArgument("piece count must be one less than the break count");
  for (Eigen::Index k = 0; k + 1 < breaks_.size(); ++k)
    if (!(breaks_(k + 1) > breaks_(k))) throw InvalidArgument("breaks must be increasing");
  if (!(y0_ > 0.0)) throw InvalidArgument("y0 must be positive");
}

PiecewisePolynomial PiecewisePolynomial::from(const QuadraticState& u, double x0, double y0) {
  Eigen::VectorXd br(2);
  br << 0.0, x0;
  return PiecewisePolynomial(br, {Coeffs{u.c0, u.c1, u.c2}}, y0);
}

PiecewisePolynomial PiecewisePolynomial::from(const PiecewiseLinearField& f) {
  const int n = f.grid().n();
  std::vector<Coeffs> pieces(n);
  for (int i = 1; i <= n; ++i) pieces[i - 1] = Coeffs{f.values()(i - 1), f.slope(i), 0.0};
  return PiecewisePolynomial(f.grid().nodes(), std::move(pieces), f.y0());
}

std::size_t PiecewisePolynomial::locate(double x) const {
  const double* first = breaks_.data() + 1;
  const double* last = breaks_.data() + breaks_.size() - 1;
  return static_cast<std::size_t>(std::upper_bound(first, last, x) - first);
}

double PiecewisePolynomial::operator()(double x) const {
  const std::size_t k = locate(x);
  const double t = x - breaks_(static_cast<Eigen::Index>(k));
  const auto& c = pieces_[k];
  return (c[2] * t + c[1]) * t + c[0];
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<Coeffs> d(pieces_.size());
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    d[k] = Coeffs{pieces_[k][1], 2.0 * pieces_[k][2], 0.0};
  return PiecewisePolynomial(breaks_, std::move(d), y0_);
}

namespace {

// Coefficients of piece k re-expanded about x = l.
PiecewisePolynomial::Coeffs shifted(const PiecewisePolynomial& p, double l) {
  const std::size_t k = p.locate(l);
  const auto& c = p.pieces()[k];
  const double s = l - p.breaks()(static_cast<Eigen::Index>(k));
  if (s == 0.0) return c;
  return {(c[2] * s + c[1]) * s + c[0], c[1] + 2.0 * c[2] * s, c[2]};
}

}  // namespace

double l2_diff(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  const auto& ba = a.breaks();
  const auto& bb = b.breaks();
  if (ba(0) != bb(0) || ba(ba.size() - 1) != bb(bb.size() - 1) || a.y0() != b.y0())
    throw InvalidArgument("fields are defined on different domains");

  std::vector<double> merged(ba.data(), ba.data() + ba.size());
  merged.insert(merged.end(), bb.data(), bb.data() + bb.size());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  static const double node = std::sqrt(0.6);
  static const std::array<double, 3> gx{-node, 0.0, node};
  static const std::array<double, 3> gw{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    const double l = merged[k];
    const double half = 0.5 * (merged[k + 1] - l);
    const auto ca = shifted(a, l);
    const auto cb = shifted(b, l);
    const std::array<double, 3> d{ca[0] - cb[0], ca[1] - cb[1], ca[2] - cb[2]};
    double s = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double t = half * (1.0 + gx[j]);
      const double v = (d[2] * t + d[1]) * t + d[0];
      s += gw[j] * v * v;
    }
    sum += half * s;
  }
  return std::sqrt(a.y0() * sum);
}

double l2_diff_derivative(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return l2_diff(a.derivative(), b.derivative());
}

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::State: return "state";
    case ErrorKind::Derivative: return "derivative";
    case ErrorKind::Control: return "control";
    case ErrorKind::Cost: return "cost";
  }
  return "";
}

OrderFit fit_order(const std::vector<ErrorRecord>& records) {
  if (records.size() < 3) throw InvalidArgument("order fit needs at least 3 records");
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (!(records[k].err > 0.0)) throw InvalidArgument("order fit needs positive errors");
    if (!(records[k].h > 0.0)) throw InvalidArgument("order fit needs positive h");
    if (k > 0 && !(records[k].h < records[k - 1].h))
      throw InvalidArgument("order fit needs strictly decreasing h");
  }
  const auto m = static_cast<Eigen::Index>(records.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd y(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    design(k, 0) = std::log(records[static_cast<std::size_t>(k)].h);
    design(k, 1) = 1.0;
    y(k) = std::log(records[static_cast<std::size_t>(k)].err);
  }
  // Normal equations of a two-parameter line fit.
  const Eigen::Vector2d coef = (design.transpose() * design).ldlt().solve(design.transpose() * y);
  OrderFit fit{coef(0), coef(1), 0.0};
  fit.residual = (design * coef - y).cwiseAbs().maxCoeff();
  return fit;
}

std::vector<ErrorRecord> state_error_study(const ProblemParams& params, SchemeKind scheme,
                                           BoundaryKind bc, const std::vector<int>& n_list,
                                           ErrorKind kind) {
  validate(params, bc);
  if (kind != ErrorKind::State && kind != ErrorKind::Derivative)
    throw InvalidArgument("state study supports state and derivative errors");
  const auto exact = PiecewisePolynomial::from(analytic::continuous_state(params, bc), params.x0,
                                               params.y0);
  const bool robin = bc == BoundaryKind::Robin;
  const bool improved = scheme == SchemeKind::Improved;
  ConstantId cid;
  if (kind == ErrorKind::State)
    cid = improved ? (robin ? ConstantId::D2 : ConstantId::D1)
                   : (robin ? ConstantId::C1Alpha : ConstantId::C1);
  else
    cid = improved ? (robin ? ConstantId::D2Tilde : ConstantId::D1Tilde) : ConstantId::C1Tilde;
  const double c = lemma_constant(cid, params);
  const int power = kind == ErrorKind::State && improved ? 2 : 1;

  std::vector<ErrorRecord> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    const Grid grid(params.x0, n);
    const auto field = PiecewisePolynomial::from(
        fdm::interpolate(fdm::explicit_nodal_solution(params, grid, scheme, bc)));
    ErrorRecord rec;
    rec.h = grid.h();
    if (robin) rec.alpha = params.alpha;
    rec.err = kind == ErrorKind::State ? l2_diff(exact, field) : l2_diff_derivative(exact, field);
    rec.bound = c * std::pow(rec.h, power);
    rec.kind = kind;
    out.push_back(rec);
  }
  return out;
}

double robin_dirichlet_gap(const ProblemParams& params, const Grid& grid) {
  const auto uha = fdm::interpolate(
      fdm::explicit_nodal_solution(params, grid, SchemeKind::Classical, BoundaryKind::Robin));
  const auto uh = fdm::interpolate(
      fdm::explicit_nodal_solution(params, grid, SchemeKind::Classical, BoundaryKind::Dirichlet));
  return l2_diff(PiecewisePolynomial::from(uha), PiecewisePolynomial::from(uh));
}

std::vector<SweepRow> double_limit_sweep(const ProblemParams& params, const std::vector<int>& n_list,
                                         const std::vector<double>& alpha_list,
                                         SweepTarget target) {
  if (n_list.empty()) throw InvalidArgument("n list is empty");
  if (alpha_list.empty()) throw InvalidArgument("alpha list is empty");
  validate(params, BoundaryKind::Dirichlet);

  std::optional<ControlProblem> problem;
  if (target == SweepTarget::ControlG) problem = ControlProblem::SourceG;
  if (target == SweepTarget::ControlQ) problem = ControlProblem::FluxQ;
  if (target == SweepTarget::ControlB) problem = ControlProblem::AmbientB;

  const auto u = PiecewisePolynomial::from(
      analytic::continuous_state(params, BoundaryKind::Dirichlet), params.x0, params.y0);
  std::optional<double> c_op;
  if (problem)
    c_op = analytic::continuous_optimal_control(*problem, BoundaryKind::Dirichlet, params);

  std::vector<std::pair<int, double>> keys;
  for (int n : n_list)
    for (double a : alpha_list) keys.emplace_back(n, a);
  std::sort(keys.begin(), keys.end());

  std::vector<SweepRow> rows;
  rows.reserve(keys.size());
  for (const auto& [n, a] : keys) {
    ProblemParams p = params;
    p.alpha = a;
    validate(p, BoundaryKind::Robin);
    const Grid grid(p.x0, n);
    const auto uha = PiecewisePolynomial::from(fdm::interpolate(
        fdm::explicit_nodal_solution(p, grid, SchemeKind::Classical, BoundaryKind::Robin)));
    const auto ua = PiecewisePolynomial::from(
        analytic::continuous_state(p, BoundaryKind::Robin), p.x0, p.y0);
    SweepRow row;
    row.n = n;
    row.h = grid.h();
    row.alpha = a;
    row.err_state = l2_diff(ua, uha);
    row.err_limit = l2_diff(u, uha);
    if (problem)
      row.err_control =
          std::abs(optim::discrete_optimal_control(*problem, BoundaryKind::Robin, p, grid) - *c_op);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fdheat::metrics
