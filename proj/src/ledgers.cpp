#include "fdheat/ledgers.hpp"

namespace fdheat {

double CoeffLedgerG::a5(double h) const {
  const double r = h / x0;
  double v = r / 12.0 * (r * r * r / 15.0 + r * r / 2.0 + r / 3.0 - 2.5);
  if (alpha) {
    const double ax = *alpha * x0;
    v += r / ax * (-7.0 / 6.0 + r / 3.0 + r * r / 6.0 + (-2.0 + r) / ax);
  }
  return v;
}

CoeffLedgerG coeff_ledger_g(const ProblemParams& p, BoundaryKind bc) {
  validate(p, bc);
  CoeffLedgerG c;
  c.x0 = p.x0;
  const double x0 = p.x0;
  const double q = p.q;
  const double d = (p.b - p.z_d) / x0;
  c.qa1 = 5.0 * q / 8.0 - d;
  c.qa2 = 0.75 * d - 0.5 * q;
  c.qa3 = 0.25 * d - q / 8.0;
  c.a4 = 2.0 / 15.0 + p.m1 / (x0 * x0 * x0 * x0);
  if (bc == BoundaryKind::Robin) {
    const double ax = require_alpha(p) * x0;
    c.alpha = p.alpha;
    c.qa1 += (2.5 * q + 3.0 * q / ax - 3.0 * d) / ax;
    c.qa2 += (-2.25 * q - 3.0 * q / ax + 3.0 * d) / ax;
    c.qa3 += -q / (4.0 * ax);
    c.a4 += (2.0 / 3.0 + 1.0 / ax) / ax;
  }
  c.a1 = c.qa1 / q;
  c.a2 = c.qa2 / q;
  c.a3 = c.qa3 / q;
  return c;
}

CoeffLedgerQ coeff_ledger_q(const ProblemParams& p, BoundaryKind bc) {
  validate(p, bc);
  CoeffLedgerQ c;
  const double x0 = p.x0;
  const double reg = p.m2 / (x0 * x0 * x0);
  if (bc == BoundaryKind::Dirichlet) {
    c.d1 = 1.0 / 3.0;
    c.d2 = -5.0 / 12.0;
    c.d3 = -1.0;
    c.d4 = 2.0 / 15.0;
    c.d5 = 1.0;
    c.d6 = 2.0 / 3.0;
    c.b1 = 1.0 / (c.d1 + reg);
    c.b2 = c.b1;
    return c;
  }
  const double ax = require_alpha(p) * x0;
  const double ax2 = ax * ax;
  c.d1 = 1.0 / 3.0 + 1.0 / ax + 1.0 / ax2;
  c.d2 = -5.0 / 12.0 - 5.0 / (3.0 * ax) - 2.0 / ax2;
  c.d3 = -1.0 - 2.0 / ax;
  c.d4 = 2.0 / 15.0 + 2.0 / (3.0 * ax) + 1.0 / ax2;
  c.d5 = 1.0;
  c.d6 = 2.0 / 3.0 + 2.0 / ax;
  c.b1 = (1.0 + 4.5 / ax + 6.0 / ax2) / (c.d1 + reg);
  // The h^2 coefficient of dJ/dq is g (x0/12 + 1/(6 alpha)), hence 1 + 2/(alpha x0).
  c.b2 = (1.0 + 2.0 / ax) / (c.d1 + reg);
  return c;
}

CoeffLedgerB coeff_ledger_b(const ProblemParams& p) {
  validate(p, BoundaryKind::Dirichlet);
  return CoeffLedgerB{1.0 / (4.0 * (1.0 + p.m3 / p.x0))};
}

}  // namespace fdheat
