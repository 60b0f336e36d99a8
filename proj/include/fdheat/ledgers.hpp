#pragma once

#include "fdheat/model.hpp"

#include <optional>

namespace fdheat {

/// Coefficients A1..A5(h) of the discrete optimal source (Dirichlet), or
/// A1a..A5a(h) (Robin). A1..A3 carry a 1/q factor; `qa1..qa3`
/// hold q*A_i so that callers can stay finite at q = 0.
struct CoeffLedgerG {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
  double qa1 = 0.0, qa2 = 0.0, qa3 = 0.0;
  double x0 = 1.0;
  std::optional<double> alpha;

  /// A5(h); vanishes at h = 0.
  double a5(double h) const;
};

/// B1, B2 of the discrete optimal flux and the D1..D6 coefficients of the
/// flux cost. In the Dirichlet case D_i are the alpha -> infinity limits
/// (1/3, -5/12, -1, 2/15, 1, 2/3).
struct CoeffLedgerQ {
  double b1 = 0.0, b2 = 0.0;
  double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0, d5 = 0.0, d6 = 0.0;
};

/// E1 = 1 / (4 (1 + M3/x0)).
struct CoeffLedgerB {
  double e1 = 0.0;
};

CoeffLedgerG coeff_ledger_g(const ProblemParams& params, BoundaryKind bc);
CoeffLedgerQ coeff_ledger_q(const ProblemParams& params, BoundaryKind bc);
CoeffLedgerB coeff_ledger_b(const ProblemParams& params);

}  // namespace fdheat
