#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdheat {

/// Raised for violated preconditions on user-supplied data (bad extents,
/// missing alpha, too-small grids). The CLI maps it to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot be carried out (zero pivot, non-convex
/// samples). The CLI maps it to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SchemeKind { Classical, Improved };
enum class BoundaryKind { Dirichlet, Robin };
enum class ControlProblem { SourceG, FluxQ, AmbientB };

std::string_view to_string(SchemeKind s);
std::string_view to_string(BoundaryKind b);
std::string_view to_string(ControlProblem p);

SchemeKind parse_scheme(std::string_view s);
BoundaryKind parse_boundary(std::string_view s);
ControlProblem parse_problem(std::string_view s);

/// Physical data for the rectangle (0, x0) x (0, y0). Source g, flux q on
/// the right edge, ambient temperature b and convective coefficient alpha on
/// the left edge, constant target z_d and regularization weights m1..m3.
struct ProblemParams {
  double x0 = 1.0;
  double y0 = 1.0;
  double g = 10.0;
  double q = 12.0;
  double b = 30.0;
  std::optional<double> alpha;
  double z_d = 40.0;
  double m1 = 1.0;
  double m2 = 1.0;
  double m3 = 1.0;

  bool operator==(const ProblemParams&) const = default;
};

/// Throws InvalidArgument naming the first violated constraint; returns the
/// input unchanged otherwise.
const ProblemParams& validate(const ProblemParams& params, BoundaryKind bc);

/// alpha, or InvalidArgument("alpha required") when absent.
double require_alpha(const ProblemParams& params);

/// Copy of `params` with the field selected by `problem` replaced.
ProblemParams with_control(ProblemParams params, ControlProblem problem, double value);
double control_of(const ProblemParams& params, ControlProblem problem);

/// Uniform grid on [0, x0]: n subintervals, nodes x_i = (i-1) h, i = 1..n+1.
class Grid {
 public:
  Grid(double x0, int n);

  int n() const { return n_; }
  double h() const { return h_; }
  double x0() const { return x0_; }
  std::size_t node_count() const { return static_cast<std::size_t>(n_) + 1; }

  /// 1-based node coordinate; x(n+1) is x0 exactly.
  double x(int i) const { return i == n_ + 1 ? x0_ : (i - 1) * h_; }
  Eigen::VectorXd nodes() const;

  bool operator==(const Grid&) const = default;

 private:
  double x0_;
  int n_;
  double h_;
};

Grid make_grid(double x0, int n);

/// u(x) = c2 x^2 + c1 x + c0, constant in y.
struct QuadraticState {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const { return (c2 * x + c1) * x + c0; }
  double derivative(double x) const { return 2.0 * c2 * x + c1; }
};

/// Nodal values on a grid, linearly interpolated in x and constant in y on
/// [0, y0].
class PiecewiseLinearField {
 public:
  PiecewiseLinearField(Grid grid, Eigen::VectorXd values, double y0);

  const Grid& grid() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }
  double y0() const { return y0_; }

  double operator()(double x) const;
  /// Slope on [x_i, x_{i+1}], i = 1..n.
  double slope(int i) const;

 private:
  Grid grid_;
  Eigen::VectorXd values_;
  double y0_;
};

}  // namespace fdheat
