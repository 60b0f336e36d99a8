#pragma once

#include "fdheat/model.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>

namespace fdheat::fdm {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Tridiagonal system: sub/sup have size()-1 entries, sub(k) sits in row k+1.
template <typename Scalar = double>
struct TridiagonalSystem {
  Vector<Scalar> sub;
  Vector<Scalar> diag;
  Vector<Scalar> sup;
  Vector<Scalar> rhs;

  Eigen::Index size() const { return diag.size(); }

  Matrix<Scalar> dense() const {
    const Eigen::Index m = size();
    Matrix<Scalar> a = Matrix<Scalar>::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      a(k, k) = diag(k);
      if (k + 1 < m) {
        a(k + 1, k) = sub(k);
        a(k, k + 1) = sup(k);
      }
    }
    return a;
  }

  Vector<Scalar> apply(const Vector<Scalar>& v) const {
    const Eigen::Index m = size();
    Vector<Scalar> r = diag.cwiseProduct(v);
    r.head(m - 1) += sup.cwiseProduct(v.tail(m - 1));
    r.tail(m - 1) += sub.cwiseProduct(v.head(m - 1));
    return r;
  }
};

/// Nodal values v_1..v_{n+1}; the Dirichlet node v_1 = b is included.
struct NodalSolution {
  Grid grid;
  Eigen::VectorXd values;
  double y0 = 1.0;
};

namespace detail {

inline void check_grid(const ProblemParams& p, const Grid& grid) {
  if (grid.x0() != p.x0) throw InvalidArgument("grid extent does not match x0");
}

}  // namespace detail

/// Builds A v = T (Dirichlet, unknowns u_2..u_{n+1}) or A_alpha v = T_alpha
/// (Robin, unknowns u_1..u_{n+1}). The improved scheme keeps the matrix and
/// only adds the g h^2 / 2 boundary corrections to the right-hand side.
template <typename Scalar = double>
TridiagonalSystem<Scalar> assemble(const ProblemParams& p, const Grid& grid, SchemeKind scheme,
                                   BoundaryKind bc) {
  validate(p, bc);
  detail::check_grid(p, grid);
  const int n = grid.n();
  const Scalar h = static_cast<Scalar>(grid.h());
  const Scalar g = static_cast<Scalar>(p.g);
  const Scalar q = static_cast<Scalar>(p.q);
  const Scalar b = static_cast<Scalar>(p.b);
  const bool improved = scheme == SchemeKind::Improved;

  const Eigen::Index m = bc == BoundaryKind::Dirichlet ? n : n + 1;
  TridiagonalSystem<Scalar> s;
  s.sub = Vector<Scalar>::Ones(m - 1);
  s.sup = Vector<Scalar>::Ones(m - 1);
  s.diag = Vector<Scalar>::Constant(m, Scalar(-2));
  s.rhs = Vector<Scalar>::Constant(m, -g * h * h);

  // Neumann row on the right edge.
  s.sub(m - 2) = Scalar(-1);
  s.diag(m - 1) = Scalar(1);
  s.rhs(m - 1) = improved ? -q * h + g * h * h / Scalar(2) : -q * h;

  if (bc == BoundaryKind::Dirichlet) {
    s.rhs(0) = -g * h * h - b;
  } else {
    const Scalar alpha = static_cast<Scalar>(require_alpha(p));
    s.diag(0) = -(Scalar(1) + alpha * h);
    s.rhs(0) = improved ? -alpha * b * h - g * h * h / Scalar(2) : -alpha * b * h;
  }
  return s;
}

/// Thomas elimination without pivoting. Throws ComputationError when a
/// pivot falls below 1e-14 in magnitude.
template <typename Scalar>
Vector<Scalar> solve_tridiagonal(const TridiagonalSystem<Scalar>& s) {
  using std::abs;
  const Eigen::Index m = s.size();
  if (m < 1 || s.rhs.size() != m || s.sub.size() != m - 1 || s.sup.size() != m - 1)
    throw InvalidArgument("inconsistent tridiagonal band sizes");

  Vector<Scalar> c(m);  // modified super-diagonal
  Vector<Scalar> d(m);  // modified right-hand side
  const Scalar tiny = static_cast<Scalar>(1e-14);

  Scalar pivot = s.diag(0);
  if (abs(pivot) < tiny) throw ComputationError("singular tridiagonal system");
  c(0) = m > 1 ? s.sup(0) / pivot : Scalar(0);
  d(0) = s.rhs(0) / pivot;
  for (Eigen::Index k = 1; k < m; ++k) {
    pivot = s.diag(k) - s.sub(k - 1) * c(k - 1);
    if (abs(pivot) < tiny) throw ComputationError("singular tridiagonal system");
    c(k) = k + 1 < m ? s.sup(k) / pivot : Scalar(0);
    d(k) = (s.rhs(k) - s.sub(k - 1) * d(k - 1)) / pivot;
  }

  Vector<Scalar> x(m);
  x(m - 1) = d(m - 1);
  for (Eigen::Index k = m - 2; k >= 0; --k) x(k) = d(k) - c(k) * x(k + 1);
  return x;
}

/// Assembles and solves; prepends v_1 = b in the Dirichlet case.
inline NodalSolution solve(const ProblemParams& p, const Grid& grid, SchemeKind scheme,
                           BoundaryKind bc) {
  const auto v = solve_tridiagonal(assemble<double>(p, grid, scheme, bc));
  NodalSolution sol{grid, Eigen::VectorXd(grid.node_count()), p.y0};
  if (bc == BoundaryKind::Dirichlet) {
    sol.values(0) = p.b;
    sol.values.tail(grid.n()) = v;
  } else {
    sol.values = v;
  }
  return sol;
}

/// Closed-form nodal values of the four discrete systems.
inline NodalSolution explicit_nodal_solution(const ProblemParams& p, const Grid& grid,
                                             SchemeKind scheme, BoundaryKind bc) {
  validate(p, bc);
  detail::check_grid(p, grid);
  const double h = grid.h();
  const double g = p.g;
  const double c = p.g * p.x0 - p.q;
  const double shift = bc == BoundaryKind::Robin ? c / require_alpha(p) : 0.0;

  NodalSolution sol{grid, Eigen::VectorXd(grid.node_count()), p.y0};
  for (int i = 1; i <= grid.n() + 1; ++i) {
    const double k = i - 1;
    double v = p.b + shift + k * h * c;
    if (scheme == SchemeKind::Improved) {
      v -= 0.5 * g * (k * h) * (k * h);
    } else {
      v -= 0.5 * g * h * h * i * k;
      if (bc == BoundaryKind::Robin) v -= g * h / *p.alpha;
    }
    sol.values(i - 1) = v;
  }
  return sol;
}

inline PiecewiseLinearField interpolate(const NodalSolution& nodal) {
  return PiecewiseLinearField(nodal.grid, nodal.values, nodal.y0);
}

/// Closed-form inverse of A (n x n) or A_alpha ((n+1) x (n+1)):
///   A^{-1}(i, j) = -min(i, j) for j < n, and i in the last column;
///   A_alpha^{-1}(i, j) = -(1 + (min(i, j) - 1) alpha h) / (alpha h) for j < n+1,
///   and +(1 + (i - 1) alpha h) / (alpha h) in the last column.
template <typename Scalar = double>
Matrix<Scalar> explicit_inverse(int n, BoundaryKind bc, Scalar alpha = Scalar(0),
                                Scalar h = Scalar(0)) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (bc == BoundaryKind::Dirichlet) {
    Matrix<Scalar> inv(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        inv(i - 1, j - 1) = j < n ? -Scalar(std::min(i, j)) : Scalar(i);
    return inv;
  }
  if (!(alpha > Scalar(0)) || !(h > Scalar(0)))
    throw InvalidArgument("Robin inverse needs alpha > 0 and h > 0");
  const int m = n + 1;
  const Scalar ah = alpha * h;
  Matrix<Scalar> inv(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      inv(i - 1, j - 1) = j < m ? -(Scalar(1) + Scalar(std::min(i, j) - 1) * ah) / ah
                                : (Scalar(1) + Scalar(i - 1) * ah) / ah;
  return inv;
}

/// Three-coefficient stencil row: coeff . (u_a, u_b, u_c) = rhs.
struct StencilRow {
  std::array<double, 3> coeff{};
  double rhs = 0.0;
};

/// Eliminates the unknown at `drop` from `r1` using `r2`, then scales the row
/// so the coefficient at `unit` becomes 1.
inline StencilRow eliminate(const StencilRow& r1, const StencilRow& r2, int drop, int unit) {
  const double k = r1.coeff[drop] / r2.coeff[drop];
  StencilRow out;
  for (int j = 0; j < 3; ++j) out.coeff[j] = r1.coeff[j] - k * r2.coeff[j];
  out.coeff[drop] = 0.0;
  out.rhs = r1.rhs - k * r2.rhs;
  const double s = out.coeff[unit];
  for (auto& c : out.coeff) c /= s;
  out.rhs /= s;
  return out;
}

/// Improved right-edge row over (u_n, u_{n+1}, u_{n+2}) derived from a ghost
/// node u_{n+2}: the equation at x_{n+1} plus a centred flux difference.
inline StencilRow ghost_point_neumann_row(double q, double g, double h) {
  const StencilRow pde{{1.0, -2.0, 1.0}, -g * h * h};
  const StencilRow flux{{-1.0, 0.0, 1.0}, -2.0 * q * h};
  return eliminate(pde, flux, 2, 1);
}

/// Improved right-edge row over (u_{n-1}, u_n, u_{n+1}) from the three-point
/// backward difference and the interior equation at x_n.
inline StencilRow three_point_neumann_row(double q, double g, double h) {
  const StencilRow flux{{1.0, -4.0, 3.0}, -2.0 * q * h};
  const StencilRow pde{{1.0, -2.0, 1.0}, -g * h * h};
  auto r = eliminate(flux, pde, 0, 2);
  // Normalised on u_{n+1}; the assembled row uses the same orientation.
  return r;
}

/// Improved left-edge Robin row over (u_1, u_2, u_3) from the three-point
/// forward difference and the interior equation at x_2, scaled so that the
/// u_2 coefficient is 1.
inline StencilRow three_point_robin_row(double alpha, double b, double g, double h) {
  // (-3 u1 + 4 u2 - u3) - 2 alpha h u1 = -2 alpha h b
  const StencilRow flux{{-3.0 - 2.0 * alpha * h, 4.0, -1.0}, -2.0 * alpha * h * b};
  const StencilRow pde{{1.0, -2.0, 1.0}, -g * h * h};
  return eliminate(flux, pde, 2, 1);
}

}  // namespace fdheat::fdm
