#include "fdheat/analytic.hpp"
#include "fdheat/ledgers.hpp"
#include "fdheat/metrics.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace fdheat::metrics {

namespace {

const std::vector<std::pair<ConstantId, std::string_view>>& names() {
  static const std::vector<std::pair<ConstantId, std::string_view>> table{
      {ConstantId::C1, "C1"},           {ConstantId::C1Tilde, "C1~"},
      {ConstantId::C1Alpha, "C1a"},     {ConstantId::C2, "C2"},
      {ConstantId::C3, "C3"},           {ConstantId::C3Star, "C3*"},
      {ConstantId::C4, "C4"},           {ConstantId::C5, "C5"},
      {ConstantId::C6, "C6"},           {ConstantId::C2Alpha, "C2a"},
      {ConstantId::C3Alpha, "C3a"},     {ConstantId::C3AlphaStar, "C3a*"},
      {ConstantId::C4Alpha, "C4a"},     {ConstantId::C5Alpha, "C5a"},
      {ConstantId::C6Alpha, "C6a"},     {ConstantId::C7, "C7"},
      {ConstantId::C8, "C8"},           {ConstantId::C9, "C9"},
      {ConstantId::C10, "C10"},         {ConstantId::C11, "C11"},
      {ConstantId::C7Alpha, "C7a"},     {ConstantId::C8Alpha, "C8a"},
      {ConstantId::C9Alpha, "C9a"},     {ConstantId::C10Alpha, "C10a"},
      {ConstantId::C11Alpha, "C11a"},   {ConstantId::C12, "C12"},
      {ConstantId::C13, "C13"},         {ConstantId::C14, "C14"},
      {ConstantId::C15, "C15"},         {ConstantId::C16, "C16"},
      {ConstantId::C12Alpha, "C12a"},   {ConstantId::C13Alpha, "C13a"},
      {ConstantId::C14Alpha, "C14a"},   {ConstantId::C15Alpha, "C15a"},
      {ConstantId::C16Alpha, "C16a"},   {ConstantId::F1Alpha, "F1a"},
      {ConstantId::F2Alpha, "F2a"},     {ConstantId::F3Alpha, "F3a"},
      {ConstantId::D1, "D1"},           {ConstantId::D1Tilde, "D1~"},
      {ConstantId::D2, "D2"},           {ConstantId::D2Tilde, "D2~"},
  };
  return table;
}

constexpr auto D = BoundaryKind::Dirichlet;
constexpr auto R = BoundaryKind::Robin;

// Signed C3* / C3a*, written with q A_i so that q = 0 is allowed.
double c3_star(const ProblemParams& p, BoundaryKind bc) {
  const auto a = coeff_ledger_g(p, bc);
  double w = 5.0 / 24.0;
  if (bc == R) w += 7.0 / (6.0 * require_alpha(p) * p.x0);
  return (a.qa2 * a.a4 + w * a.qa1) / (3.0 * p.x0 * p.x0 * a.a4 * a.a4);
}

double c4(const ProblemParams& p, BoundaryKind bc) {
  const auto a = coeff_ledger_g(p, bc);
  const double x0 = p.x0;
  const double gop = analytic::continuous_optimal_control(ControlProblem::SourceG, bc, p);
  const double c3 = c3_star(p, bc);
  double v = -2.0 * a.a4 * c3 * gop * x0 * x0 * x0 + 5.0 / 24.0 * gop * gop * x0 * x0 +
             2.0 / 3.0 * a.qa1 * c3 * x0 * x0 + 2.0 / 3.0 * a.qa2 * gop * x0;
  if (bc == R) v += 7.0 / 6.0 * gop * gop * x0 / require_alpha(p);
  return 0.5 * x0 * x0 * p.y0 * std::abs(v);
}

double c9(const ProblemParams& p, BoundaryKind bc) {
  const auto c = coeff_ledger_q(p, bc);
  const double x0 = p.x0, g = p.g, bz = p.b - p.z_d;
  const double qop = analytic::continuous_optimal_control(ControlProblem::FluxQ, bc, p);
  const double reg = p.m2 / (x0 * x0 * x0);
  double v = -c.b1 / 6.0 * (2.0 * qop * x0 * (c.d1 + reg) + c.d2 * g * x0 * x0 + c.d3 * bz) +
             qop * x0 / 3.0 - 5.0 * g * x0 * x0 / 24.0 - bz / 2.0;
  if (bc == R) {
    const double a = require_alpha(p);
    v += 3.0 * qop / (2.0 * a) - 7.0 * g * x0 / (6.0 * a) - 2.0 * bz / (a * x0) +
         2.0 * (qop - g * x0) / (a * a * x0);
  }
  return 0.5 * x0 * x0 * p.y0 * std::abs(g) * std::abs(v);
}

struct FTerms {
  double f1, f2, f3;
};

FTerms f_terms(const ProblemParams& p) {
  const double x0 = p.x0, y0 = p.y0, g = p.g, q = p.q, zd = p.z_d;
  const double a = require_alpha(p);
  const double ax = a * x0;
  const double e1 = coeff_ledger_b(p).e1;
  const double baop = analytic::continuous_optimal_control(ControlProblem::AmbientB, R, p);
  FTerms f;
  f.f1 = 0.5 * x0 * x0 * y0 * g *
         (-(baop - zd) * (0.5 + 2.0 / ax) + g * x0 * x0 * (-5.0 / 24.0 - 7.0 / (6.0 * ax) - 2.0 / (ax * ax)) +
          q * x0 * (1.0 / 3.0 + 3.0 / (2.0 * ax) + 2.0 / (ax * ax)));
  f.f2 = x0 * x0 * y0 * g / a * e1 * (g * x0 - q) * (1.0 + 4.0 / ax);
  f.f3 = 0.5 * x0 * x0 * y0 * g * e1 * (1.0 + 4.0 / ax) *
         (2.0 * baop * (1.0 + p.m3 / x0) + 2.0 / 3.0 * g * x0 * x0 - q * x0 - 2.0 * zd);
  return f;
}

double evaluate(ConstantId id, const ProblemParams& p) {
  const double x0 = p.x0, y0 = p.y0, g = p.g, q = p.q, b = p.b, zd = p.z_d;
  const double ag = std::abs(g);
  const double bz = b - zd;
  const double alpha = is_alpha_variant(id) ? require_alpha(p) : 0.0;
  const double ax = alpha * x0;

  switch (id) {
    case ConstantId::C1: return x0 * ag * std::sqrt(2.0 / 15.0 * x0 * y0);
    case ConstantId::C1Tilde: return ag * std::sqrt(x0 * y0 / 3.0);
    case ConstantId::C1Alpha:
      return ag * x0 * std::sqrt(x0 * y0 * (2.0 / 15.0 + 2.0 / (3.0 * ax) + 1.0 / (ax * ax)));

    case ConstantId::C2:
      return 0.5 * x0 * x0 * x0 * y0 * ag * std::abs(-5.0 / 24.0 * g * x0 + q / 3.0 - 0.5 * bz / x0);
    case ConstantId::C3Star: return c3_star(p, D);
    case ConstantId::C3: return std::abs(c3_star(p, D));
    case ConstantId::C4: return c4(p, D);
    case ConstantId::C5:
    case ConstantId::C6: {
      const double gop = analytic::continuous_optimal_control(ControlProblem::SourceG, D, p);
      const double s = x0 * c3_star(p, D);  // r * g_op with r = x0 C3*/g_op
      if (id == ConstantId::C5)
        return std::sqrt(x0 * x0 * x0 * y0 / 120.0 * (10.0 * gop * gop - 25.0 * s * gop + 16.0 * s * s));
      return std::sqrt(x0 * y0 / 6.0 * (2.0 * gop * gop - 3.0 * s * gop + 2.0 * s * s));
    }

    case ConstantId::C2Alpha:
      return 0.5 * x0 * x0 * x0 * y0 * ag *
             std::abs(g * x0 * (-5.0 / 24.0 - 7.0 / (6.0 * ax) - 2.0 / (ax * ax)) +
                      q * (1.0 / 3.0 + 1.5 / ax + 2.0 / (ax * ax)) + bz / x0 * (-0.5 - 2.0 / ax));
    case ConstantId::C3AlphaStar: return c3_star(p, R);
    case ConstantId::C3Alpha: return std::abs(c3_star(p, R));
    case ConstantId::C4Alpha: return c4(p, R);
    case ConstantId::C5Alpha: {
      const double gop = analytic::continuous_optimal_control(ControlProblem::SourceG, D, p);
      const double gaop = analytic::continuous_optimal_control(ControlProblem::SourceG, R, p);
      const double c3 = c3_star(p, R);
      const double r = x0 * c3 / gop;
      const double inner =
          10.0 - 25.0 * r + 16.0 * r * r +
          (60.0 + 120.0 / ax - 240.0 * c3 / (alpha * gaop) + 120.0 * c3 * x0 / (alpha * gaop * gaop) -
           140.0 * c3 * x0 / gaop + 80.0 * c3 * x0 * x0 / (gaop * gaop)) /
              ax;
      return std::abs(gaop) * std::sqrt(x0 * x0 * x0 * y0 / 120.0 * inner);
    }
    case ConstantId::C6Alpha: {
      const double gaop = analytic::continuous_optimal_control(ControlProblem::SourceG, R, p);
      const double s = x0 * c3_star(p, R);
      return std::sqrt(x0 * y0 / 6.0 * (2.0 * gaop * gaop - 3.0 * s * gaop + 2.0 * s * s));
    }

    case ConstantId::C7:
      return 0.5 * x0 * x0 * y0 * ag * std::abs(q * x0 / 3.0 - 5.0 / 24.0 * g * x0 * x0 - bz / 2.0);
    case ConstantId::C8: return std::abs(g * coeff_ledger_q(p, D).b1 / 6.0);
    case ConstantId::C9: return c9(p, D);
    case ConstantId::C10: {
      const double b1 = coeff_ledger_q(p, D).b1;
      return std::abs(g * (b1 - 3.0)) * x0 * std::sqrt(x0 * y0 / 108.0);
    }
    case ConstantId::C11:
    case ConstantId::C11Alpha: {
      const double b1 = coeff_ledger_q(p, id == ConstantId::C11 ? D : R).b1;
      return ag / 6.0 * std::sqrt(x0 * y0 * (12.0 - 6.0 * b1 + b1 * b1));
    }

    case ConstantId::C7Alpha:
      return 0.5 * x0 * x0 * y0 * ag *
             std::abs(q * x0 / 3.0 - 5.0 * g * x0 * x0 / 24.0 - bz / 2.0 + 3.0 * q / (2.0 * alpha) -
                      7.0 * g * x0 / (6.0 * alpha) - 2.0 * bz / (x0 * alpha) +
                      2.0 * (q - g * x0) / (x0 * alpha * alpha));
    case ConstantId::C8Alpha: return std::abs(g * coeff_ledger_q(p, R).b1 / 6.0);
    case ConstantId::C9Alpha: return c9(p, R);
    case ConstantId::C10Alpha: {
      const double b1 = coeff_ledger_q(p, R).b1;
      const double i1 = 1.0 / ax, i2 = i1 * i1;
      return ag * x0 * std::sqrt(x0 * y0 / 108.0) *
             std::sqrt(b1 * b1 * (3.0 * i2 + 3.0 * i1 + 1.0) + 9.0 * (12.0 * i2 + 6.0 * i1 + 1.0) -
                       3.0 * b1 * (12.0 * i2 + 9.0 * i1 + 2.0));
    }

    case ConstantId::C12:
      return 0.5 * x0 * x0 * y0 * ag * std::abs(-b / 2.0 + q * x0 / 3.0 - 5.0 * g * x0 * x0 / 24.0 + zd / 2.0);
    case ConstantId::C13: return std::abs(coeff_ledger_b(p).e1 * g * x0);
    case ConstantId::C14: {
      const double e1 = coeff_ledger_b(p).e1;
      const double bop = analytic::continuous_optimal_control(ControlProblem::AmbientB, D, p);
      return 0.5 * x0 * x0 * y0 * ag *
             std::abs(e1 * (2.0 * bop * (1.0 + p.m3 / x0) + 2.0 / 3.0 * g * x0 * x0 - q * x0 - 2.0 * zd) -
                      bop / 2.0 + q * x0 / 3.0 - 5.0 * g * x0 * x0 / 24.0 + zd / 2.0);
    }
    case ConstantId::C15: {
      const double e1 = coeff_ledger_b(p).e1;
      return x0 * ag * std::sqrt(x0 * y0 / 2.0) * std::sqrt(2.0 * e1 * e1 - e1 + 1.0 / 6.0);
    }
    case ConstantId::C16:
    case ConstantId::C16Alpha: return ag * std::sqrt(x0 * y0 / 3.0);

    case ConstantId::C12Alpha:
      return 0.5 * x0 * y0 * ag *
             std::abs(-b * (x0 / 2.0 + 2.0 / alpha) +
                      g * (-5.0 * x0 * x0 * x0 / 24.0 - 7.0 * x0 * x0 / (6.0 * alpha) - 2.0 * x0 / (alpha * alpha)) +
                      q * (x0 * x0 / 3.0 + 3.0 * x0 / (2.0 * alpha) + 2.0 / (alpha * alpha)) +
                      zd * (x0 / 2.0 + 2.0 / alpha));
    case ConstantId::C13Alpha: return coeff_ledger_b(p).e1 * ag * x0 * std::abs(1.0 + 4.0 / ax);
    case ConstantId::C14Alpha: {
      const auto f = f_terms(p);
      return std::abs(f.f1 + f.f2 + f.f3);
    }
    case ConstantId::C15Alpha: {
      const double e1 = coeff_ledger_b(p).e1;
      const double i1 = 1.0 / ax, i2 = i1 * i1;
      return x0 * ag * std::sqrt(x0 * y0 / 2.0) *
             std::sqrt(e1 * e1 * (2.0 + 16.0 * i1 + 32.0 * i2) + e1 * (-1.0 - 8.0 * i1 - 16.0 * i2) +
                       1.0 / 6.0 + i1 + 2.0 * i2);
    }
    case ConstantId::F1Alpha: return f_terms(p).f1;
    case ConstantId::F2Alpha: return f_terms(p).f2;
    case ConstantId::F3Alpha: return f_terms(p).f3;

    case ConstantId::D1:
    case ConstantId::D2: return std::sqrt(x0 * y0 / 120.0) * ag;
    case ConstantId::D1Tilde:
    case ConstantId::D2Tilde: return std::sqrt(x0 * y0 / 12.0) * ag;
  }
  throw InvalidArgument("unknown constant");
}

}  // namespace

std::string_view to_string(ConstantId id) {
  for (const auto& [k, name] : names())
    if (k == id) return name;
  return "";
}

ConstantId parse_constant_id(std::string_view name) {
  for (const auto& [k, s] : names())
    if (s == name) return k;
  throw InvalidArgument("unknown constant " + std::string(name));
}

const std::vector<ConstantId>& all_constant_ids() {
  static const std::vector<ConstantId> ids = [] {
    std::vector<ConstantId> v;
    for (const auto& entry : names()) v.push_back(entry.first);
    return v;
  }();
  return ids;
}

bool is_alpha_variant(ConstantId id) {
  switch (id) {
    case ConstantId::C1Alpha: case ConstantId::C2Alpha: case ConstantId::C3Alpha:
    case ConstantId::C3AlphaStar: case ConstantId::C4Alpha: case ConstantId::C5Alpha:
    case ConstantId::C6Alpha: case ConstantId::C7Alpha: case ConstantId::C8Alpha:
    case ConstantId::C9Alpha: case ConstantId::C10Alpha: case ConstantId::C11Alpha:
    case ConstantId::C12Alpha: case ConstantId::C13Alpha: case ConstantId::C14Alpha:
    case ConstantId::C15Alpha: case ConstantId::C16Alpha: case ConstantId::F1Alpha:
    case ConstantId::F2Alpha: case ConstantId::F3Alpha:
      return true;
    default:
      return false;
  }
}

double lemma_constant(ConstantId id, const ProblemParams& params) {
  validate(params, is_alpha_variant(id) ? BoundaryKind::Robin : BoundaryKind::Dirichlet);
  return evaluate(id, params);
}

}  // namespace fdheat::metrics
