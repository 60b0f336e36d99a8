#include "fdheat/analytic.hpp"
#include "fdheat/fdm.hpp"
#include "fdheat/metrics.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fdheat;
using metrics::ConstantId;
using metrics::PiecewisePolynomial;

namespace {

PiecewisePolynomial exact_field(const ProblemParams& p, BoundaryKind bc) {
  return PiecewisePolynomial::from(analytic::continuous_state(p, bc), p.x0, p.y0);
}

PiecewisePolynomial discrete_field(const ProblemParams& p, int n, SchemeKind s, BoundaryKind bc) {
  return PiecewisePolynomial::from(fdm::interpolate(fdm::explicit_nodal_solution(p, Grid(p.x0, n), s, bc)));
}

ProblemParams with_alpha(double a) {
  ProblemParams p;
  p.alpha = a;
  return p;
}

}  // namespace

TEST_CASE("piecewise polynomial evaluation") {
  const ProblemParams p;
  const auto u = exact_field(p, BoundaryKind::Dirichlet);
  CHECK(u(1.0) == doctest::Approx(23.0).epsilon(1e-15));
  const auto f = discrete_field(p, 4, SchemeKind::Classical, BoundaryKind::Dirichlet);
  CHECK(f(0.125) == doctest::Approx(29.4375).epsilon(1e-15));
  CHECK(f(0.25) == 28.875);
  CHECK(f(1.0) == 21.75);
  CHECK(f.derivative()(0.1) == doctest::Approx(-4.5).epsilon(1e-14));
  CHECK_THROWS_AS(PiecewisePolynomial(Eigen::Vector2d(0.0, 1.0), {}, 1.0), InvalidArgument);
}

TEST_CASE("L2 state error against the reference table and its closed form") {
  const ProblemParams p;
  const auto u = exact_field(p, BoundaryKind::Dirichlet);
  CHECK(metrics::l2_diff(u, u) == 0.0);
  const double e4 = metrics::l2_diff(u, discrete_field(p, 4, SchemeKind::Classical, BoundaryKind::Dirichlet));
  CHECK(oracle::rel_diff(e4, 0.7675914) <= 1e-5);

  for (int n : {8, 16, 100}) {
    const double h = 1.0 / n;
    const double closed = std::sqrt(1.0 / 120.0 * std::pow(h, 5) * 100.0 * n * n * n * (1.0 / (n * n) + 5.0 / n + 10.0));
    const double e = metrics::l2_diff(u, discrete_field(p, n, SchemeKind::Classical, BoundaryKind::Dirichlet));
    CHECK(oracle::rel_diff(e, closed) <= 1e-12);
    const Eigen::VectorXd v = oracle::dense_nodal(p, n, SchemeKind::Classical, BoundaryKind::Dirichlet);
    CHECK(oracle::rel_diff(e, oracle::state_error(p, BoundaryKind::Dirichlet, v)) <= 1e-10);
    if (n == 8) CHECK(oracle::rel_diff(e, 0.3722243) <= 1e-5);
  }
}

TEST_CASE("domains must match") {
  ProblemParams p;
  const auto a = exact_field(p, BoundaryKind::Dirichlet);
  ProblemParams q = p;
  q.x0 = 2.0;
  CHECK_THROWS_AS(metrics::l2_diff(a, exact_field(q, BoundaryKind::Dirichlet)), InvalidArgument);
  q = p;
  q.y0 = 2.0;
  CHECK_THROWS_AS(metrics::l2_diff(a, exact_field(q, BoundaryKind::Dirichlet)), InvalidArgument);
}

TEST_CASE("derivative errors") {
  ProblemParams p;
  const double h = 0.125;
  for (auto s : {SchemeKind::Classical, SchemeKind::Improved}) {
    const double e = metrics::l2_diff_derivative(exact_field(p, BoundaryKind::Dirichlet),
                                                 discrete_field(p, 8, s, BoundaryKind::Dirichlet));
    if (s == SchemeKind::Classical) {
      CHECK(e <= metrics::lemma_constant(ConstantId::C1Tilde, p) * h * (1.0 + 1e-9));
    } else {
      const double bound = metrics::lemma_constant(ConstantId::D1Tilde, p) * h;
      CHECK(std::abs(e - bound) <= 1e-12 * bound);
    }
  }
  p.g = 0.0;
  CHECK(metrics::l2_diff_derivative(exact_field(p, BoundaryKind::Dirichlet),
                                    discrete_field(p, 8, SchemeKind::Classical, BoundaryKind::Dirichlet)) == 0.0);
}

TEST_CASE("constant table") {
  ProblemParams p1;  // q = 12, b = 30, z_d = 40
  ProblemParams p2;
  p2.b = 50.0;
  const ProblemParams p3;
  CHECK(metrics::lemma_constant(ConstantId::C1, p1) == doctest::Approx(3.6514837).epsilon(1e-7));
  CHECK(metrics::lemma_constant(ConstantId::D1, p1) == doctest::Approx(0.9128709).epsilon(1e-7));
  CHECK(metrics::lemma_constant(ConstantId::C3, p1) == doctest::Approx(3.0244).epsilon(1e-4));
  CHECK(metrics::lemma_constant(ConstantId::C4, p1) == doctest::Approx(20.402).epsilon(1e-4));
  CHECK(metrics::lemma_constant(ConstantId::C5, p1) == doctest::Approx(2.5827).epsilon(1e-4));
  CHECK(metrics::lemma_constant(ConstantId::C6, p1) == doctest::Approx(4.4343).epsilon(1e-4));
  CHECK(metrics::lemma_constant(ConstantId::C8, p2) == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(metrics::lemma_constant(ConstantId::C9, p2) == doctest::Approx(26.5625).epsilon(1e-10));
  CHECK(metrics::lemma_constant(ConstantId::C10, p2) == doctest::Approx(2.1651).epsilon(1e-4));
  CHECK(metrics::lemma_constant(ConstantId::C11, p2) == doctest::Approx(4.7324).epsilon(1e-4));
  CHECK(metrics::lemma_constant(ConstantId::C13, p3) == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(metrics::lemma_constant(ConstantId::C14, p3) == doctest::Approx(56.25).epsilon(1e-10));
  CHECK(metrics::lemma_constant(ConstantId::C15, p3) == doctest::Approx(1.9094).epsilon(1e-4));

  CHECK_THROWS_AS(metrics::parse_constant_id("C99"), InvalidArgument);
  CHECK_THROWS_WITH_AS(metrics::lemma_constant(ConstantId::C1Alpha, p1), "alpha required", InvalidArgument);
  for (auto id : metrics::all_constant_ids()) {
    CHECK(metrics::parse_constant_id(metrics::to_string(id)) == id);
    CHECK(std::isfinite(metrics::lemma_constant(id, with_alpha(50.0))));
  }
}

TEST_CASE("C1alpha bound decreases in alpha towards C1") {
  const ProblemParams p;
  const double c1 = metrics::lemma_constant(ConstantId::C1, p);
  double prev = 1e300;
  for (double a : {1.0, 10.0, 100.0, 1e4, 1e6}) {
    const double c = metrics::lemma_constant(ConstantId::C1Alpha, with_alpha(a));
    CHECK(c < prev);
    CHECK(c > c1);
    prev = c;
  }
  CHECK(prev == doctest::Approx(c1).epsilon(1e-5));
}

TEST_CASE("order fits") {
  std::vector<metrics::ErrorRecord> synth;
  for (double h : {0.5, 0.25, 0.1, 0.01}) synth.push_back({h, std::nullopt, 7.0 * h, 0.0, metrics::ErrorKind::State});
  const auto f = metrics::fit_order(synth);
  CHECK(f.slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(f.residual <= 1e-12);

  CHECK_THROWS_AS(metrics::fit_order({synth[0], synth[1]}), InvalidArgument);
  auto zero = synth;
  zero[2].err = 0.0;
  CHECK_THROWS_AS(metrics::fit_order(zero), InvalidArgument);
  auto unsorted = synth;
  std::swap(unsorted[0], unsorted[1]);
  CHECK_THROWS_AS(metrics::fit_order(unsorted), InvalidArgument);

  const ProblemParams p;
  const std::vector<int> ns{4, 8, 16, 32, 64};
  const auto cl = metrics::state_error_study(p, SchemeKind::Classical, BoundaryKind::Dirichlet, ns);
  const double slope_c = metrics::fit_order(cl).slope;
  CHECK(slope_c >= 0.95);
  CHECK(slope_c <= 1.05);
  const auto im = metrics::state_error_study(p, SchemeKind::Improved, BoundaryKind::Dirichlet, ns);
  const double slope_i = metrics::fit_order(im).slope;
  CHECK(slope_i == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(slope_i - slope_c >= 0.9);
  CHECK(slope_i - slope_c <= 1.1);
}

TEST_CASE("state error study reproduces the table entries and bounds") {
  const std::vector<int> ns{4, 8, 16, 32, 64};
  const auto d = metrics::state_error_study(ProblemParams{}, SchemeKind::Classical, BoundaryKind::Dirichlet, ns);
  const double col[5] = {0.7675914, 0.3722243, 0.1832549, 0.09091783, 0.04528211};
  for (int k = 0; k < 5; ++k) {
    CHECK(oracle::rel_diff(d[k].err, col[k]) <= 1e-5);
    CHECK(d[k].err <= d[k].bound);
    CHECK(!d[k].alpha);
  }
  const auto r50 = metrics::state_error_study(with_alpha(50.0), SchemeKind::Classical, BoundaryKind::Robin, {4});
  CHECK(oracle::rel_diff(r50[0].err, 0.8120374) <= 1e-5);
  CHECK(*r50[0].alpha == 50.0);
  const auto r200 = metrics::state_error_study(with_alpha(200.0), SchemeKind::Classical, BoundaryKind::Robin, {64});
  CHECK(oracle::rel_diff(r200[0].err, 0.04596121) <= 1e-5);

  for (auto bc : {BoundaryKind::Dirichlet, BoundaryKind::Robin})
    for (auto s : {SchemeKind::Classical, SchemeKind::Improved})
      for (auto kind : {metrics::ErrorKind::State, metrics::ErrorKind::Derivative})
        for (const auto& r : metrics::state_error_study(with_alpha(20.0), s, bc, {2, 3, 7, 50, 300}, kind)) {
          CHECK(r.err <= r.bound * (1.0 + 1e-9));
          if (s == SchemeKind::Improved) CHECK(std::abs(r.err - r.bound) <= 1e-10 * r.bound);
        }
  CHECK_THROWS_AS(metrics::state_error_study(ProblemParams{}, SchemeKind::Classical, BoundaryKind::Dirichlet, {4},
                                             metrics::ErrorKind::Cost),
                  InvalidArgument);
}

TEST_CASE("Robin to Dirichlet gap is an exact constant shift") {
  for (int n : {4, 10}) {
    double prev = 0.0;
    for (double a : {25.0, 50.0, 100.0, 200.0}) {
      const ProblemParams p = with_alpha(a);
      const Grid grid(1.0, n);
      const double gap = metrics::robin_dirichlet_gap(p, grid);
      CHECK(oracle::rel_diff(gap, std::abs(10.0 - 12.0 - 10.0 * grid.h()) / a) <= 1e-10);
      if (prev > 0.0) CHECK(gap == doctest::Approx(prev / 2.0).epsilon(1e-10));
      prev = gap;
    }
  }
}

TEST_CASE("double limit sweep") {
  const ProblemParams p;
  const auto rows = metrics::double_limit_sweep(p, {10, 3, 5}, {500.0, 10.0, 50.0}, metrics::SweepTarget::ControlG);
  REQUIRE(rows.size() == 9);
  for (std::size_t k = 1; k < rows.size(); ++k)
    CHECK(std::make_pair(rows[k - 1].n, rows[k - 1].alpha) < std::make_pair(rows[k].n, rows[k].alpha));
  auto at = [&](int n, double a) {
    for (const auto& r : rows)
      if (r.n == n && r.alpha == a) return r;
    FAIL("missing row");
    return rows[0];
  };
  const auto r1 = at(3, 10.0), r2 = at(5, 50.0), r3 = at(10, 500.0);
  CHECK(r1.err_limit > r2.err_limit);
  CHECK(r2.err_limit > r3.err_limit);
  CHECK(r1.err_state > r2.err_state);
  CHECK(r2.err_state > r3.err_state);
  CHECK(*r3.err_control > 0.0);

  const auto col = metrics::double_limit_sweep(p, {4, 8, 16, 32, 64}, {50.0}, metrics::SweepTarget::State);
  const double reference[5] = {0.8120374, 0.3942740, 0.1942324, 0.09639423, 0.04801716};
  for (int k = 0; k < 5; ++k) {
    CHECK(oracle::rel_diff(col[k].err_state, reference[k]) <= 1e-5);
    CHECK(!col[k].err_control);
  }

  ProblemParams flat;
  flat.g = 0.0;
  flat.q = 0.0;
  for (const auto& r : metrics::double_limit_sweep(flat, {3, 5}, {10.0, 50.0}, metrics::SweepTarget::State)) {
    CHECK(r.err_state == 0.0);
    CHECK(r.err_limit == 0.0);
  }
  CHECK_THROWS_AS(metrics::double_limit_sweep(p, {4}, {}, metrics::SweepTarget::State), InvalidArgument);
  CHECK_THROWS_AS(metrics::double_limit_sweep(p, {}, {5.0}, metrics::SweepTarget::State), InvalidArgument);
}
