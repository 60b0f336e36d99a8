#pragma once

#include "fdheat/model.hpp"

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace fdheat::metrics {

/// y-independent field on [0, x0] x [0, y0]: polynomial of degree <= 2 in x
/// on each [breaks(k), breaks(k+1)]. Coefficients are local to the piece,
/// c0 + c1 t + c2 t^2 with t = x - breaks(k), so nodal values stay exact.
class PiecewisePolynomial {
 public:
  using Coeffs = std::array<double, 3>;

  PiecewisePolynomial(Eigen::VectorXd breaks, std::vector<Coeffs> pieces, double y0);

  static PiecewisePolynomial from(const QuadraticState& u, double x0, double y0);
  static PiecewisePolynomial from(const PiecewiseLinearField& f);

  const Eigen::VectorXd& breaks() const { return breaks_; }
  const std::vector<Coeffs>& pieces() const { return pieces_; }
  double y0() const { return y0_; }

  /// Index of the piece containing x (right-continuous, last piece closed).
  std::size_t locate(double x) const;
  double operator()(double x) const;
  PiecewisePolynomial derivative() const;

 private:
  Eigen::VectorXd breaks_;
  std::vector<Coeffs> pieces_;
  double y0_;
};

/// ||a - b||_{L2(Omega)} by 3-point Gauss-Legendre on the merged breakpoints.
double l2_diff(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
/// ||d/dx (a - b)||_{L2(Omega)}.
double l2_diff_derivative(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

enum class ConstantId {
  C1, C1Tilde, C1Alpha,
  C2, C3, C3Star, C4, C5, C6,
  C2Alpha, C3Alpha, C3AlphaStar, C4Alpha, C5Alpha, C6Alpha,
  C7, C8, C9, C10, C11,
  C7Alpha, C8Alpha, C9Alpha, C10Alpha, C11Alpha,
  C12, C13, C14, C15, C16,
  C12Alpha, C13Alpha, C14Alpha, C15Alpha, C16Alpha,
  F1Alpha, F2Alpha, F3Alpha,
  D1, D1Tilde, D2, D2Tilde,
};

std::string_view to_string(ConstantId id);
/// Throws InvalidArgument("unknown constant ...").
ConstantId parse_constant_id(std::string_view name);
const std::vector<ConstantId>& all_constant_ids();
bool is_alpha_variant(ConstantId id);

/// Value of an error-bound constant. The fixed control of the cost bounds
/// (C2, C7, C12 and their alpha forms) is read from params; the optimum
/// bounds use the optimal controls implied by params.
double lemma_constant(ConstantId id, const ProblemParams& params);

enum class ErrorKind { State, Derivative, Control, Cost };
std::string_view to_string(ErrorKind k);

struct ErrorRecord {
  double h = 0.0;
  std::optional<double> alpha;
  double err = 0.0;
  double bound = 0.0;
  ErrorKind kind = ErrorKind::State;
};

struct OrderFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

/// Least-squares slope of log(err) against log(h). Needs >= 3 records with
/// strictly decreasing h and err > 0.
OrderFit fit_order(const std::vector<ErrorRecord>& records);

/// One record per n: err = ||u - u^h|| (State) or of the x-derivatives
/// (Derivative), bound from the matching constant.
std::vector<ErrorRecord> state_error_study(const ProblemParams& params, SchemeKind scheme,
                                           BoundaryKind bc, const std::vector<int>& n_list,
                                           ErrorKind kind = ErrorKind::State);

/// ||u^h_alpha - u^h||, both classical.
double robin_dirichlet_gap(const ProblemParams& params, const Grid& grid);

enum class SweepTarget { State, ControlG, ControlQ, ControlB };

struct SweepRow {
  int n = 0;
  double h = 0.0;
  double alpha = 0.0;
  double err_state = 0.0;               // ||u_alpha - u^h_alpha||
  double err_limit = 0.0;               // ||u - u^h_alpha||
  std::optional<double> err_control;    // |c^h_alpha,op - c_op|
};

/// Classical-scheme sweep over the (n, alpha) product, sorted by (n, alpha).
std::vector<SweepRow> double_limit_sweep(const ProblemParams& params, const std::vector<int>& n_list,
                                         const std::vector<double>& alpha_list, SweepTarget target);

}  // namespace fdheat::metrics
