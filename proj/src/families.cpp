#include "solv/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "solv/errors.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv {

using sym::SymExpr;
using sym::Var;

namespace {

constexpr double kPi = std::numbers::pi;

SymExpr num(double v) { return SymExpr(Rational(v)); }
SymExpr rat(const Rational& q) { return SymExpr(q); }

Rational param_or(const ParamMap& p, const std::string& name, const ParamMap& defaults) {
  if (auto it = p.find(name); it != p.end()) return it->second;
  if (auto it = defaults.find(name); it != defaults.end()) return it->second;
  throw SpecError("missing parameter " + name);
}

// Open interval where -s^2 + lambda s + mu > 0, trimmed by 5% per side.
Interval quadratic_domain(const Rational& lambda, const Rational& mu) {
  double l = lambda.get_d(), m = mu.get_d();
  double disc = l * l + 4 * m;
  if (disc <= 0) throw DomainError("empty domain: -s^2 + lambda s + mu > 0 has no solution");
  double r = std::sqrt(disc);
  double lo = (l - r) / 2, hi = (l + r) / 2, w = hi - lo;
  return {lo + 0.05 * w, hi - 0.05 * w};
}

// A unit-width interval just right of the pole s = -p.
Interval right_of_pole(const Rational& p) {
  double c = -p.get_d();
  return {c + 0.5, c + 1.5};
}

}  // namespace

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Circle: return "circle";
    case CurveKind::Horocycle: return "horocycle";
    case CurveKind::Equidistant: return "equidistant";
    case CurveKind::Geodesic: return "geodesic";
  }
  return "?";
}

CurveKind kind_from_curvature(double kappa) {
  constexpr double tol = 1e-12;
  if (std::fabs(kappa) <= tol) return CurveKind::Geodesic;
  if (std::fabs(kappa - 1) <= tol) return CurveKind::Horocycle;
  return kappa > 1 ? CurveKind::Circle : CurveKind::Equidistant;
}

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::Geodesic: return "geodesic";
    case LineKind::Equidistant: return "equidistant";
    case LineKind::Horocycle: return "horocycle";
  }
  return "?";
}

Sol3Point SpaceCurve::at(double t) const {
  return {sym::eval(X[0], 0, t), sym::eval(X[1], 0, t), sym::eval(X[2], 0, t)};
}

std::pair<SpaceCurve, CircleInfo> generalized_circle_curve(double s, double a, double b, double r) {
  if (!(r > 0)) throw DomainError("radius must be positive");
  if (b < 0) throw DomainError("b must be nonnegative");
  SpaceCurve c;
  const SymExpr& t = sym::t_var;
  c.X = {num(s), num(a) + num(r) * sym::cos(t), sym::log(num(b) + num(r) * sym::sin(t))};
  if (b > r) {
    c.t_domain = {-kPi, kPi};
  } else {
    // b + r sin t > 0 on (-theta, pi + theta), sin theta = b / r
    double theta = std::asin(b / r);
    c.t_domain = {-theta, kPi + theta};
  }
  c.label = "circle image";
  CircleInfo info;
  info.s = s;
  info.a = a;
  info.b = b;
  info.r = r;
  info.curvature = b / r;
  info.kind = kind_from_curvature(info.curvature);
  if (b > r) {
    double h = std::sqrt(b * b - r * r);
    info.center = PlanePoint{a, h};
    info.hyperbolic_radius = std::log((b + r) / h);
  }
  return {c, info};
}

std::pair<SpaceCurve, CircleInfo> circle_curve(double s, double a, double b, double r) {
  if (!(r > 0)) throw DomainError("radius must be positive");
  if (!(b - r > 0)) throw DomainError("b - r must be positive for a circle");
  auto out = generalized_circle_curve(s, a, b, r);
  out.first.label = "circle";
  return out;
}

SpaceCurve line_curve(LineKind kind, double s, double a, double b) {
  SpaceCurve c;
  const SymExpr& t = sym::t_var;
  switch (kind) {
    case LineKind::Geodesic:
      c.X = {num(s), num(a), sym::log(t)};
      c.t_domain = {0, 10};
      c.label = "geodesic";
      break;
    case LineKind::Equidistant: {
      if (a == 0) throw DomainError("equidistant line needs a != 0");
      c.X = {num(s), t, sym::log(num(a) * t + num(b))};
      // a t + b > 0
      double root = -b / a;
      c.t_domain = a > 0 ? Interval{root, root + 10} : Interval{root - 10, root};
      c.label = "equidistant";
      break;
    }
    case LineKind::Horocycle:
      if (!(a > 0)) throw DomainError("horocycle line needs a > 0");
      c.X = {num(s), t, num(std::log(a))};
      c.t_domain = {-10, 10};
      c.label = "horocycle";
      break;
  }
  return c;
}

SurfaceChart cyclic_chart(const SymExpr& a, const SymExpr& b, const SymExpr& r) {
  const SymExpr& t = sym::t_var;
  SymExpr base = b + r * sym::sin(t);
  SurfaceChart c;
  c.X = {sym::s_var, a + r * sym::cos(t), sym::log(base)};
  c.s_domain = {-1, 1};
  c.t_domain = {-kPi, kPi};
  c.label = "cyclic_P";
  SymExpr n1 = (sym::differentiate(r, Var::S) + sym::differentiate(a, Var::S) * sym::cos(t) + sym::differentiate(b, Var::S) * sym::sin(t)) /
               sym::pow(base, 2);
  c.preset_normal = SymTriple{sym::normalize(n1), -sym::cos(t), -sym::sin(t)};
  return c;
}

SymTriple line_of_centers(const SymExpr& a, const SymExpr& b, const SymExpr& r) {
  SymExpr h = sym::pow(b * b - r * r, Rational(1, 2));
  return {sym::s_var, a, sym::log(h)};
}

std::pair<SymExpr, SymExpr> line_of_centers_half_plane(const SymExpr& a, const SymExpr& b, const SymExpr& r) {
  return {a, sym::pow(b * b - r * r, Rational(1, 2))};
}

SurfaceChart foliated_chart(LineKind kind, const SymExpr& a, const SymExpr& b) {
  const SymExpr& s = sym::s_var;
  const SymExpr& t = sym::t_var;
  SymExpr da = sym::differentiate(a, Var::S);
  SurfaceChart c;
  c.s_domain = {-1, 1};
  c.t_domain = {-1, 1};
  switch (kind) {
    case LineKind::Geodesic:
      c.X = {s, a, t};
      c.preset_normal = SymTriple{da * sym::exp(-t), -sym::exp(t), SymExpr()};
      c.label = "geodesic_line";
      break;
    case LineKind::Equidistant: {
      SymExpr L = a * t + b;
      SymExpr dL = da * t + sym::differentiate(b, Var::S);
      c.X = {s, t, sym::log(L)};
      c.preset_normal = SymTriple{sym::normalize(-dL / sym::pow(L, 2)), -a, SymExpr(1)};
      c.t_domain = {0.5, 1.5};
      c.label = "equidistant_line";
      break;
    }
    case LineKind::Horocycle:
      c.X = {s, t, a};
      c.preset_normal = SymTriple{da * sym::exp(-a), SymExpr(), SymExpr(-1)};
      c.label = "horocycle_line";
      break;
  }
  for (auto& e : c.X) e = sym::normalize(e);
  for (auto& e : *c.preset_normal) e = sym::normalize(e);
  return c;
}

SurfaceChart zplane_cyclic_chart(const SymExpr& a, const SymExpr& b, const SymExpr& r) {
  const SymExpr& s = sym::s_var;
  const SymExpr& t = sym::t_var;
  SymExpr da = sym::differentiate(a, Var::S), db = sym::differentiate(b, Var::S), dr = sym::differentiate(r, Var::S);
  SurfaceChart c;
  c.X = {a + r * sym::exp(-s) * sym::cos(t), b + r * sym::exp(s) * sym::sin(t), s};
  SymExpr n3 = r * sym::cos(2 * t) - da * sym::exp(s) * sym::cos(t) - db * sym::exp(-s) * sym::sin(t) - dr;
  c.preset_normal = SymTriple{sym::cos(t), sym::sin(t), sym::normalize(n3)};
  for (auto& e : c.X) e = sym::normalize(e);
  c.s_domain = {-1, 1};
  c.t_domain = {-kPi, kPi};
  c.label = "cyclic_R";
  return c;
}

const std::vector<ClassifiedInfo>& classified_catalogue() {
  using enum SurfaceClass;
  using enum Translation;
  static const std::vector<ClassifiedInfo> cat = {
      {"min_geodesic_plane", Minimal, LineKind::Geodesic, {}, {{"lambda", make_rational(1, 2)}, {"mu", make_rational(1)}}},
      {"min_equi_1", Minimal, LineKind::Equidistant, {T2}, {{"b0", make_rational(3)}, {"b1", make_rational(2)}}},
      {"min_equi_2", Minimal, LineKind::Equidistant, {T1}, {{"a0", make_rational(2)}, {"a1", make_rational(1)}}},
      {"min_horo", Minimal, LineKind::Horocycle, {T2}, {{"lambda", make_rational(0)}, {"mu", make_rational(1)}}},
      {"min_equi_b0", Informational, LineKind::Equidistant, {}, {}},
      {"flat_Qs", Flat, LineKind::Geodesic, {T1}, {{"s0", make_rational(0)}}},
      {"flat_geo_circle", Flat, LineKind::Geodesic, {T1}, {{"a", make_rational(0)}, {"r", make_rational(1)}}},
      {"flat_equi", Flat, LineKind::Equidistant, {T2}, {{"lambda", make_rational(0)}, {"mu", make_rational(1)}}},
      {"flat_horo", Flat, LineKind::Horocycle, {T2}, {{"lambda", make_rational(0)}, {"mu", make_rational(1)}}},
      {"min_horo_corrected", Informational, LineKind::Horocycle, {T2},
       {{"lambda", make_rational(0)}, {"mu", make_rational(1)}}},
  };
  return cat;
}

const ClassifiedInfo& classified_info(const std::string& id) {
  for (const auto& c : classified_catalogue())
    if (c.id == id) return c;
  throw SpecError("unknown classified surface id: " + id);
}

SurfaceChart bind_chart(const SurfaceChart& chart, const std::map<std::string, SymExpr>& functions,
                        const ParamMap& params) {
  SurfaceChart out = chart;
  auto bind = [&](SymExpr e) {
    for (const auto& [name, expr] : functions) e = sym::substitute(e, name, expr);
    return params.empty() ? e : sym::bind_params(e, params);
  };
  for (auto& e : out.X) e = bind(e);
  if (out.preset_normal)
    for (auto& e : *out.preset_normal) e = bind(e);
  return out;
}

SurfaceChart classified_surface(const std::string& id, const ParamMap& params) {
  const ClassifiedInfo& info = classified_info(id);
  for (const auto& [k, v] : params)
    if (!info.defaults.contains(k)) throw SpecError("unknown parameter " + k + " for " + id);
  auto P = [&](const std::string& n) { return param_or(params, n, info.defaults); };
  const SymExpr& s = sym::s_var;
  const SymExpr& t = sym::t_var;
  SymExpr a = SymExpr::func("a"), b = SymExpr::func("b");

  SurfaceChart c;
  std::optional<SymExpr> display_z;  // the stated abs form replaces the plain log
  if (id == "min_geodesic_plane") {
    c = bind_chart(foliated_chart(LineKind::Geodesic, a), {{"a", rat(P("lambda")) * s + rat(P("mu"))}}, {});
  } else if (id == "min_equi_1") {
    Rational b0 = P("b0"), b1 = P("b1");
    if (b0 == 0) throw DomainError("b0 must be nonzero");
    SymExpr bb = rat(b0) / (s + rat(b1));
    c = bind_chart(foliated_chart(LineKind::Equidistant, a, b), {{"a", SymExpr()}, {"b", bb}}, {});
    display_z = sym::log(sym::abs(bb));
    c.s_domain = right_of_pole(b1);
  } else if (id == "min_equi_2") {
    Rational a0 = P("a0"), a1 = P("a1");
    if (a0 == 0) throw DomainError("a0 must be nonzero");
    SymExpr aa = rat(a0) / (s + rat(a1));
    c = bind_chart(foliated_chart(LineKind::Equidistant, a, b), {{"a", aa}, {"b", SymExpr()}}, {});
    display_z = sym::log(sym::abs(rat(a0) * t / (s + rat(a1))));
    c.s_domain = right_of_pole(a1);
    c.t_domain = {0.5, 1.5};
  } else if (id == "min_horo" || id == "min_horo_corrected") {
    Rational lambda = P("lambda"), mu = P("mu");
    SymExpr l = sym::log(sym::abs(s + rat(mu)));
    SymExpr aa = id == "min_horo" ? rat(lambda) + l : rat(lambda) - l;
    c = bind_chart(foliated_chart(LineKind::Horocycle, a), {{"a", aa}}, {});
    c.s_domain = right_of_pole(mu);
  } else if (id == "min_equi_b0") {
    c = bind_chart(foliated_chart(LineKind::Equidistant, a, b), {{"b", SymExpr()}}, {});
  } else if (id == "flat_Qs") {
    c = bind_chart(foliated_chart(LineKind::Geodesic, a), {{"a", rat(P("s0"))}}, {});
  } else if (id == "flat_geo_circle") {
    Rational r = P("r");
    if (r <= 0) throw DomainError("r must be positive");
    c = cyclic_chart(rat(P("a")), SymExpr(), rat(r));
    for (auto& e : c.X) e = sym::normalize(e);
    for (auto& e : *c.preset_normal) e = sym::normalize(e);
    c.t_domain = {0.2, kPi - 0.2};
  } else if (id == "flat_equi") {
    Rational lambda = P("lambda"), mu = P("mu");
    SymExpr q = -s * s + rat(lambda) * s + rat(mu);
    c = bind_chart(foliated_chart(LineKind::Equidistant, a, b),
                   {{"a", SymExpr()}, {"b", SymExpr(1) / sym::pow(q, Rational(1, 2))}}, {});
    c.s_domain = quadratic_domain(lambda, mu);
  } else if (id == "flat_horo") {
    Rational lambda = P("lambda"), mu = P("mu");
    SymExpr q = -s * s + rat(lambda) * s + rat(mu);
    SymExpr aa = SymExpr(make_rational(-1, 2)) * sym::log(sym::abs(q));
    c = bind_chart(foliated_chart(LineKind::Horocycle, a), {{"a", aa}}, {});
    c.s_domain = quadratic_domain(lambda, mu);
  }
  if (display_z) c.X[2] = sym::normalize(*display_z);
  c.label = id;
  return c;
}

SurfaceChart resolve_chart_abs(const SurfaceChart& chart, const sym::Bindings& b) {
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      grid.emplace_back(chart.s_domain.lo + chart.s_domain.width() * i / 6.0,
                        chart.t_domain.lo + chart.t_domain.width() * j / 6.0);
  SurfaceChart out = chart;
  for (auto& e : out.X) e = sym::normalize(sym::resolve_abs(e, grid, b));
  if (out.preset_normal)
    for (auto& e : *out.preset_normal) e = sym::normalize(sym::resolve_abs(e, grid, b));
  return out;
}

Sol3Point chart_point(const SurfaceChart& chart, double s, double t, const sym::Bindings& b) {
  return {sym::eval(chart.X[0], s, t, b), sym::eval(chart.X[1], s, t, b), sym::eval(chart.X[2], s, t, b)};
}

namespace {

struct Matcher {
  const SurfaceChart& chart;
  const sym::Bindings& b;
  std::array<SymExpr, 3> Xs, Xt;

  Matcher(const SurfaceChart& c, const sym::Bindings& bind) : chart(c), b(bind) {
    for (int i = 0; i < 3; ++i) {
      Xs[i] = sym::differentiate(c.X[i], Var::S);
      Xt[i] = sym::differentiate(c.X[i], Var::T);
    }
  }

  // Squared model-coordinate distance from X(s, t) to q; NaN where X is undefined.
  double distance2(double s, double t, const Sol3Point& q) const {
    try {
      Sol3Point p = chart_point(chart, s, t, b);
      double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
      return dx * dx + dy * dy + dz * dz;
    } catch (const std::exception&) {
      return std::nan("");
    }
  }

  // Levenberg-Marquardt from (s, t); returns the final distance.
  double solve(double s, double t, const Sol3Point& q) const {
    double f = distance2(s, t, q);
    if (std::isnan(f)) return f;
    double lambda = 1e-3;
    for (int it = 0; it < 200 && f > 1e-24; ++it) {
      std::array<double, 3> r, js, jt;
      try {
        Sol3Point p = chart_point(chart, s, t, b);
        r = {p.x - q.x, p.y - q.y, p.z - q.z};
        for (int i = 0; i < 3; ++i) {
          js[i] = sym::eval(Xs[i], s, t, b);
          jt[i] = sym::eval(Xt[i], s, t, b);
        }
      } catch (const std::exception&) {
        break;
      }
      double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
      for (int i = 0; i < 3; ++i) {
        a11 += js[i] * js[i];
        a12 += js[i] * jt[i];
        a22 += jt[i] * jt[i];
        g1 += js[i] * r[i];
        g2 += jt[i] * r[i];
      }
      bool improved = false;
      while (lambda < 1e12) {
        double m11 = a11 * (1 + lambda), m22 = a22 * (1 + lambda);
        double det = m11 * m22 - a12 * a12;
        if (det == 0) {
          lambda *= 10;
          continue;
        }
        double ds = -(m22 * g1 - a12 * g2) / det;
        double dt = -(m11 * g2 - a12 * g1) / det;
        double fn = distance2(s + ds, t + dt, q);
        if (!std::isnan(fn) && fn < f) {
          s += ds;
          t += dt;
          f = fn;
          lambda = std::max(lambda / 10, 1e-12);
          improved = true;
          break;
        }
        lambda *= 10;
      }
      if (!improved) break;
    }
    return f;
  }
};

// Any parameter, or the named one when `name` is nonempty.
bool has_param(const SymExpr& e, const std::string& name = {}) {
  if (e.kind() == sym::Kind::Param) return name.empty() || e.name() == name;
  for (const auto& a : e.args())
    if (has_param(a, name)) return true;
  return false;
}

}  // namespace

InvarianceReport invariance_check(const SurfaceChart& chart, Translation kind, const sym::Bindings& b,
                                  std::uint64_t seed, int samples) {
  constexpr double tol = 1e-8;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.1, 0.9), shift(0.05, 0.4), coin(0, 1);
  Matcher m(chart, b);
  InvarianceReport rep;
  rep.invariant = true;
  const Interval& S = chart.s_domain;
  const Interval& T = chart.t_domain;
  for (int k = 0; k < samples; ++k) {
    double s = S.lo + unit(rng) * S.width();
    double t = T.lo + unit(rng) * T.width();
    double c = shift(rng) * (coin(rng) < 0.5 ? -1 : 1);
    Sol3Point q = translate(kind, c, chart_point(chart, s, t, b));
    std::vector<std::pair<double, double>> starts = {{s, t}, {s + c, t}, {s, t + c}, {s - c, t}, {s, t - c}};
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; j <= 6; ++j)
        starts.emplace_back(S.lo - S.width() + i * S.width() / 2, T.lo - T.width() + j * T.width() / 2);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [s0, t0] : starts) {
      double f = m.solve(s0, t0, q);
      if (!std::isnan(f)) best = std::min(best, f);
      if (best < tol * tol * 1e-4) break;
    }
    double res = std::sqrt(best);
    rep.max_residual = std::max(rep.max_residual, res);
    ++rep.samples;
    if (!(res < tol)) {
      rep.invariant = false;
      rep.detail = "translated point (c = " + std::to_string(c) + ") misses the image by " + std::to_string(res);
    }
  }
  if (rep.invariant) rep.detail = "all translated samples lie on the image";
  return rep;
}

std::vector<std::string> FamilyBuild::unbound() const {
  std::vector<std::string> out;
  for (const char* f : {"a", "b", "r"}) {
    bool found = false;
    for (const auto& e : chart.X) found = found || e.contains_func(f);
    if (chart.preset_normal)
      for (const auto& e : *chart.preset_normal) found = found || e.contains_func(f);
    if (found) out.emplace_back(f);
  }
  return out;
}

FamilyBuild build_family(const FamilySpec& spec) {
  FamilyBuild fb;
  const std::string& tag = spec.family;
  fb.family = tag;
  SymExpr a = SymExpr::func("a"), b = SymExpr::func("b"), r = SymExpr::func("r");
  std::vector<std::string> allowed;
  bool classified = false;
  if (tag == "cyclic_P") {
    fb.generic = cyclic_chart(a, b, r);
    fb.trig_family = true;
    allowed = {"a", "b", "r"};
  } else if (tag == "cyclic_R") {
    fb.generic = zplane_cyclic_chart(a, b, r);
    fb.trig_family = true;
    allowed = {"a", "b", "r"};
  } else if (tag == "geodesic_line") {
    fb.generic = foliated_chart(LineKind::Geodesic, a);
    allowed = {"a"};
  } else if (tag == "equidistant_line") {
    fb.generic = foliated_chart(LineKind::Equidistant, a, b);
    allowed = {"a", "b"};
  } else if (tag == "horocycle_line") {
    fb.generic = foliated_chart(LineKind::Horocycle, a);
    allowed = {"a"};
  } else if (tag == "leaf_P" || tag == "leaf_Q" || tag == "leaf_R") {
    Foliation f = tag == "leaf_P" ? Foliation::F1 : tag == "leaf_Q" ? Foliation::F2 : Foliation::F3;
    double s0 = 0;
    for (const auto& [k, v] : spec.params) {
      if (k != "s") throw SpecError("unknown parameter " + k + " for " + tag);
      s0 = parse_rational(v).get_d();
    }
    fb.generic = leaf_chart(f, s0);
    fb.generic.label = tag;
  } else {
    classified = true;
    ParamMap pm;
    for (const auto& [k, v] : spec.params) pm[k] = parse_rational(v);
    fb.generic = classified_surface(tag, pm);
    fb.params = pm;
    fb.trig_family = tag == "flat_geo_circle";
  }
  fb.chart = fb.generic;
  fb.generic_family = !allowed.empty();
  if (!classified && !allowed.empty()) {
    for (const auto& [k, v] : spec.params) {
      if (std::find(allowed.begin(), allowed.end(), k) != allowed.end()) {
        SymExpr e = sym::parse(v);
        if (e.depends_on(Var::T)) throw SpecError("binding for " + k + " depends on t");
        fb.functions[k] = e;
      } else if (k.size() > 1 || k == "c" || k == "q") {
        fb.params[k] = parse_rational(v);
      } else {
        throw SpecError("unknown parameter " + k + " for " + tag);
      }
    }
    for (const auto& [k, v] : fb.params) {
      bool used = false;
      for (const auto& [f, e] : fb.functions) used = used || has_param(e, k);
      if (!used) throw SpecError("parameter " + k + " does not occur in any binding");
    }
    fb.chart = bind_chart(fb.generic, fb.functions, fb.params);
  }
  if (spec.s_domain) fb.chart.s_domain = fb.generic.s_domain = *spec.s_domain;
  if (spec.t_domain) fb.chart.t_domain = fb.generic.t_domain = *spec.t_domain;
  for (const Interval& d : {fb.chart.s_domain, fb.chart.t_domain})
    if (!(d.hi >= d.lo)) throw SpecError("domain interval must satisfy lo <= hi");

  // Spot-check that a fully bound chart is defined on its domain.
  if (fb.unbound().empty()) {
    bool free_param = false;
    for (const auto& e : fb.chart.X) free_param = free_param || has_param(e);
    if (!free_param) {
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
          double s = fb.chart.s_domain.lo + fb.chart.s_domain.width() * i / 8.0;
          double t = fb.chart.t_domain.lo + fb.chart.t_domain.width() * j / 8.0;
          try {
            chart_point(fb.chart, s, t);
          } catch (const SingularityError& e) {
            throw DomainError("chart is undefined at (s, t) = (" + std::to_string(s) + ", " + std::to_string(t) +
                              "): " + e.what());
          }
        }
    }
  }
  return fb;
}

}  // namespace solv
