#include "solv/curvature.hpp"

#include <cmath>

#include "solv/errors.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv {

using sym::RatFunc;
using sym::SymExpr;

namespace {

using RTriple = std::array<RatFunc, 3>;

RTriple to_rf(const SymTriple& v) { return {RatFunc::from(v[0]), RatFunc::from(v[1]), RatFunc::from(v[2])}; }

SymTriple to_sym(const RTriple& v) { return {v[0].reduced().to_expr(), v[1].reduced().to_expr(), v[2].reduced().to_expr()}; }

RatFunc rdot(const RTriple& a, const RTriple& b) { return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).reduced(); }

RTriple rcross(const RTriple& a, const RTriple& b) {
  return {(a[1] * b[2] - a[2] * b[1]).reduced(), (a[2] * b[0] - a[0] * b[2]).reduced(),
          (a[0] * b[1] - a[1] * b[0]).reduced()};
}

struct ChartCalculus {
  RTriple Xs, Xt;

  explicit ChartCalculus(const SurfaceChart& chart) {
    RatFunc ez = RatFunc::from(sym::exp(chart.X[2]));
    RatFunc emz = RatFunc::from(sym::exp(-chart.X[2]));
    RTriple X = to_rf(chart.X);
    for (int d = 0; d < 2; ++d) {
      sym::Var v = d == 0 ? sym::Var::S : sym::Var::T;
      RTriple& out = d == 0 ? Xs : Xt;
      out = {(ez * X[0].derivative(v)).reduced(), (emz * X[1].derivative(v)).reduced(), X[2].derivative(v)};
    }
  }

  // d/du V_k E_k + sum (X_u)_i V_j nabla_{E_i} E_j, using
  // nabla_1 E1 = -E3, nabla_1 E3 = E1, nabla_2 E2 = E3, nabla_2 E3 = -E2.
  RTriple nabla(const RTriple& V, Direction dir) const {
    sym::Var v = dir == Direction::S ? sym::Var::S : sym::Var::T;
    const RTriple& X = dir == Direction::S ? Xs : Xt;
    RTriple out{V[0].derivative(v), V[1].derivative(v), V[2].derivative(v)};
    out[0] = (out[0] + X[0] * V[2]).reduced();
    out[1] = (out[1] - X[1] * V[2]).reduced();
    out[2] = (out[2] - X[0] * V[0] + X[1] * V[1]).reduced();
    return out;
  }
};

}  // namespace

std::pair<SymTriple, SymTriple> partials(const SurfaceChart& chart) {
  ChartCalculus c(chart);
  return {to_sym(c.Xs), to_sym(c.Xt)};
}

SymTriple covariant_derivative(const SymTriple& V, Direction dir, const SurfaceChart& chart) {
  ChartCalculus c(chart);
  return to_sym(c.nabla(to_rf(V), dir));
}

SymTriple cross(const SymTriple& a, const SymTriple& b) { return to_sym(rcross(to_rf(a), to_rf(b))); }

SymExpr dot(const SymTriple& a, const SymTriple& b) { return rdot(to_rf(a), to_rf(b)).to_expr(); }

SymTriple normal(const SurfaceChart& chart, NormalChoice choice) {
  if (choice == NormalChoice::Preset && chart.preset_normal) return to_sym(to_rf(*chart.preset_normal));
  ChartCalculus c(chart);
  return to_sym(rcross(c.Xs, c.Xt));
}

FundamentalData fundamental_data(const SurfaceChart& chart, NormalChoice choice) {
  ChartCalculus c(chart);
  RTriple N = choice == NormalChoice::Preset && chart.preset_normal ? to_rf(*chart.preset_normal) : rcross(c.Xs, c.Xt);
  FundamentalData fd;
  fd.E = rdot(c.Xs, c.Xs).to_expr();
  fd.F = rdot(c.Xs, c.Xt).to_expr();
  fd.G = rdot(c.Xt, c.Xt).to_expr();
  fd.l = rdot(c.nabla(c.Xs, Direction::S), N).to_expr();
  fd.m = rdot(c.nabla(c.Xt, Direction::S), N).to_expr();
  fd.m_alt = rdot(c.nabla(c.Xs, Direction::T), N).to_expr();
  fd.n = rdot(c.nabla(c.Xt, Direction::T), N).to_expr();
  fd.normal = to_sym(N);
  fd.Xs = to_sym(c.Xs);
  fd.Xt = to_sym(c.Xt);
  return fd;
}

SymExpr h_numerator(const FundamentalData& fd) {
  RatFunc E = RatFunc::from(fd.E), F = RatFunc::from(fd.F), G = RatFunc::from(fd.G);
  RatFunc l = RatFunc::from(fd.l), m = RatFunc::from(fd.m), n = RatFunc::from(fd.n);
  return (E * n - RatFunc(2) * F * m + G * l).reduced().to_expr();
}

SymExpr k_numerator(const FundamentalData& fd) {
  RatFunc l = RatFunc::from(fd.l), m = RatFunc::from(fd.m), n = RatFunc::from(fd.n);
  return (l * n - m * m).reduced().to_expr();
}

SymExpr h_numerator(const SurfaceChart& chart, NormalChoice choice) { return h_numerator(fundamental_data(chart, choice)); }

SymExpr k_numerator(const SurfaceChart& chart, NormalChoice choice) { return k_numerator(fundamental_data(chart, choice)); }

CurvatureEvaluator::CurvatureEvaluator(const SurfaceChart& chart, NormalChoice choice)
    : CurvatureEvaluator(fundamental_data(chart, choice)) {}

CurvatureEvaluator::CurvatureEvaluator(FundamentalData fd) : fd_(std::move(fd)) {
  normal_sq_ = dot(fd_.normal, fd_.normal);
}

CurvatureValues CurvatureEvaluator::at(double s, double t, const sym::Bindings& b) const {
  double E = sym::eval(fd_.E, s, t, b), F = sym::eval(fd_.F, s, t, b), G = sym::eval(fd_.G, s, t, b);
  double det = E * G - F * F;
  if (!(det > kDegenerateMetric)) throw SingularityError("degenerate first fundamental form (EG - F^2 = " + std::to_string(det) + ")");
  double nn = sym::eval(normal_sq_, s, t, b);
  if (!(nn > 0)) throw SingularityError("normal vanishes");
  double l = sym::eval(fd_.l, s, t, b), m = sym::eval(fd_.m, s, t, b), n = sym::eval(fd_.n, s, t, b);
  CurvatureValues out;
  out.H = 0.5 * (E * n - 2 * F * m + G * l) / (det * std::sqrt(nn));
  out.K = (l * n - m * m) / (det * nn);
  out.det_I = det;
  return out;
}

double mean_curvature_numeric(const SurfaceChart& chart, double s, double t, const sym::Bindings& b, NormalChoice choice) {
  return CurvatureEvaluator(chart, choice).at(s, t, b).H;
}

double gauss_curvature_numeric(const SurfaceChart& chart, double s, double t, const sym::Bindings& b, NormalChoice choice) {
  return CurvatureEvaluator(chart, choice).at(s, t, b).K;
}

}  // namespace solv
