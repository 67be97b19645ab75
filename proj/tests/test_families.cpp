#include <doctest.h>

#include <cmath>
#include <numbers>

#include "solv/errors.hpp"
#include "solv/families.hpp"
#include "solv/sym.hpp"

using namespace solv;
using namespace solv::sym;

namespace {

bool same(const SymExpr& a, const SymExpr& b) { return normalize(a - b).is_zero(); }
bool same(const SymExpr& a, const char* b) { return same(a, parse(b)); }

// Hyperbolic geodesic curvature of a half-plane curve, from finite differences.
double half_plane_curvature(const std::function<PlanePoint(double)>& c, double t, double h = 1e-4) {
  auto p = c(t), pp = c(t + h), pm = c(t - h);
  double du = (pp.u - pm.u) / (2 * h), dv = (pp.v - pm.v) / (2 * h);
  double ddu = (pp.u - 2 * p.u + pm.u) / (h * h), ddv = (pp.v - 2 * p.v + pm.v) / (h * h);
  double v = p.v;
  // covariant acceleration for (du^2 + dv^2) / v^2
  double au = ddu - 2 * du * dv / v;
  double av = ddv + (du * du - dv * dv) / v;
  double speed2 = (du * du + dv * dv) / (v * v);
  double cross = (du * av - dv * au) / (v * v);
  return cross / std::pow(speed2, 1.5);
}

}  // namespace

TEST_CASE("curvature taxonomy") {
  CHECK(kind_from_curvature(2) == CurveKind::Circle);
  CHECK(kind_from_curvature(1) == CurveKind::Horocycle);
  CHECK(kind_from_curvature(0.5) == CurveKind::Equidistant);
  CHECK(kind_from_curvature(0) == CurveKind::Geodesic);
  for (auto [b, r] : {std::pair{3.0, 1.0}, {1.0, 1.0}, {0.4, 1.0}, {0.0, 2.0}}) {
    auto [curve, info] = generalized_circle_curve(0.3, 0.1, b, r);
    CHECK(info.curvature == doctest::Approx(b / r));
    CHECK(info.kind == kind_from_curvature(b / r));
    CHECK(info.center.has_value() == (b > r));
    for (int k = 1; k < 10; ++k) {
      double t = curve.t_domain.lo + curve.t_domain.width() * k / 10;
      CHECK(b + r * std::sin(t) > 0);
    }
  }
}

TEST_CASE("circle curve of the reference figure") {
  auto [curve, info] = circle_curve(0, 0, 2, 1);
  for (double t : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
    auto q = phi_s(0, curve.at(t));
    CHECK(q.u == doctest::Approx(std::cos(t)).epsilon(1e-13));
    CHECK(q.v == doctest::Approx(2 + std::sin(t)).epsilon(1e-13));
  }
  REQUIRE(info.hyperbolic_radius);
  CHECK(*info.hyperbolic_radius == doctest::Approx(0.549306).epsilon(1e-6));
  CHECK(*info.hyperbolic_radius == doctest::Approx(std::log(3 / std::sqrt(3.0))));
  CHECK(info.curvature == 2);
  CHECK(info.kind == CurveKind::Circle);
  REQUIRE(info.center);
  CHECK(info.center->v == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("circle images fit a Euclidean circle") {
  auto [curve, info] = circle_curve(0.4, -0.3, 2.5, 0.7);
  double worst = 0;
  for (int k = 0; k < 64; ++k) {
    double t = -std::numbers::pi + 2 * std::numbers::pi * k / 64;
    auto q = phi_s(0.4, curve.at(t));
    worst = std::max(worst, std::fabs(std::hypot(q.u - info.a, q.v - info.b) - info.r));
  }
  CHECK(worst < 1e-10);
  // hyperbolic distance from the center is the hyperbolic radius
  auto c = *info.center;
  auto q = phi_s(0.4, curve.at(1.1));
  double d = std::acosh(1 + ((q.u - c.u) * (q.u - c.u) + (q.v - c.v) * (q.v - c.v)) / (2 * q.v * c.v));
  CHECK(d == doctest::Approx(*info.hyperbolic_radius));
}

TEST_CASE("circle domain errors") {
  CHECK_THROWS_AS(circle_curve(0, 0, 1, 1), DomainError);
  CHECK_THROWS_AS(circle_curve(0, 0, 2, 0), DomainError);
  CHECK_THROWS_AS(circle_curve(0, 0, 2, -1), DomainError);
  CHECK_NOTHROW(generalized_circle_curve(0, 0, 1, 1));
}

TEST_CASE("line curves") {
  auto g = line_curve(LineKind::Geodesic, 0.5, 0);
  auto p = g.at(2.0);
  CHECK(p.x == doctest::Approx(0.5));
  CHECK(p.y == 0);
  CHECK(p.z == doctest::Approx(std::log(2.0)));
  auto h = line_curve(LineKind::Horocycle, 0, 1);
  CHECK(h.at(0.7).y == doctest::Approx(0.7));
  CHECK(h.at(0.7).z == doctest::Approx(0));
}

TEST_CASE("equidistant line a=1, b=0 has hyperbolic curvature 1/sqrt 2") {
  auto e = line_curve(LineKind::Equidistant, 0, 1, 0);
  for (double t : {0.5, 1.0, 3.0}) {
    auto q = phi_s(0, e.at(t));
    CHECK(q.u == doctest::Approx(q.v));
    double k = half_plane_curvature([&](double u) { return phi_s(0, e.at(u)); }, t);
    CHECK(std::fabs(k) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-6));
  }
  // sanity of the curvature routine: a geodesic and a horocycle
  auto g = line_curve(LineKind::Geodesic, 0, 0.3);
  CHECK(std::fabs(half_plane_curvature([&](double u) { return phi_s(0, g.at(u)); }, 1.5)) < 1e-6);
  auto h = line_curve(LineKind::Horocycle, 0, 2);
  CHECK(std::fabs(half_plane_curvature([&](double u) { return phi_s(0, h.at(u)); }, 0.4)) ==
        doctest::Approx(1).epsilon(1e-6));
}

TEST_CASE("cyclic chart components") {
  auto a = SymExpr::func("a"), b = SymExpr::func("b"), r = SymExpr::func("r");
  auto c = cyclic_chart(a, b, r);
  CHECK(same(c.X[0], "s"));
  CHECK(same(c.X[1], "a + r*cos(t)"));
  CHECK(same(c.X[2], "log(b + r*sin(t))"));
  auto flat = cyclic_chart(parse("2"), SymExpr(), parse("3"));
  CHECK(same(flat.X[2], "log(3*sin(t))"));
}

TEST_CASE("line of centers maps to the half-plane centers") {
  auto a = parse("s/2"), b = parse("3 + s"), r = parse("1 + s^2/4");
  auto centers = line_of_centers(a, b, r);
  auto [cu, cv] = line_of_centers_half_plane(a, b, r);
  for (double s : {-0.8, 0.0, 0.6}) {
    Sol3Point p{eval(centers[0], s, 0), eval(centers[1], s, 0), eval(centers[2], s, 0)};
    CHECK(p.x == doctest::Approx(s));
    auto q = phi_s(s, p);
    CHECK(q.u == doctest::Approx(eval(cu, s, 0)));
    CHECK(q.v == doctest::Approx(eval(cv, s, 0)));
    auto [curve, info] = circle_curve(s, eval(a, s, 0), eval(b, s, 0), eval(r, s, 0));
    CHECK(info.center->u == doctest::Approx(q.u));
    CHECK(info.center->v == doctest::Approx(q.v));
  }
}

TEST_CASE("foliated charts") {
  auto g = foliated_chart(LineKind::Geodesic, parse("lambda*s + mu"));
  CHECK(same(g.X[1], "lambda*s + mu"));
  CHECK(same(g.X[2], "t"));
  auto e = foliated_chart(LineKind::Equidistant, SymExpr(), parse("b0/(s + b1)"));
  CHECK(same(e.X[2], "log(b0/(s + b1))"));
  auto h = foliated_chart(LineKind::Horocycle, SymExpr::func("a"));
  CHECK(same(h.X[2], SymExpr::func("a")));
}

TEST_CASE("classified charts") {
  auto h = classified_surface("min_horo");
  CHECK(same(h.X[2], "log(abs(s + 1))"));
  auto f = classified_surface("flat_horo");
  CHECK(same(f.X[2], "-log(abs(1 - s^2))/2"));
  CHECK(f.s_domain.lo > -1);
  CHECK(f.s_domain.hi < 1);
  auto q = classified_surface("flat_Qs", {{"s0", make_rational(3, 2)}});
  CHECK(same(q.X[1], "3/2"));
  CHECK_THROWS_AS(classified_surface("nope"), SpecError);
  CHECK_THROWS_AS(classified_surface("min_horo", {{"nu", 1}}), SpecError);
  CHECK_THROWS_AS(classified_surface("flat_equi", {{"lambda", 0}, {"mu", -1}}), DomainError);
  for (const auto& info : classified_catalogue()) CHECK_NOTHROW(classified_surface(info.id));
}

TEST_CASE("abs forms resolve to the derived charts") {
  auto e2 = resolve_chart_abs(classified_surface("min_equi_2"));
  CHECK(same(e2.X[2], "log(2*t/(s + 1))"));
  auto e1 = resolve_chart_abs(classified_surface("min_equi_1"));
  CHECK(same(e1.X[2], "log(3/(s + 2))"));
}

TEST_CASE("z-plane circles keep their Euclidean radius") {
  auto c = zplane_cyclic_chart(parse("1/2"), parse("-1"), parse("3/4"));
  for (double s : {-0.7, 0.0, 0.9})
    for (double t : {0.0, 1.0, 2.2}) {
      auto p = chart_point(c, s, t);
      CHECK(p.z == doctest::Approx(s));
      auto q = psi_s(s, p);
      double cu = std::exp(s) * 0.5, cv = std::exp(-s) * -1.0;
      CHECK(std::hypot(q.u - cu, q.v - cv) == doctest::Approx(0.75));
    }
}

TEST_CASE("invariance checks") {
  CHECK(invariance_check(classified_surface("min_horo"), Translation::T2).invariant);
  CHECK(invariance_check(classified_surface("min_equi_1"), Translation::T2).invariant);
  CHECK(invariance_check(classified_surface("flat_Qs"), Translation::T1).invariant);
  CHECK(invariance_check(classified_surface("flat_horo"), Translation::T2).invariant);
  auto cyc = cyclic_chart(parse("s^2"), parse("3"), parse("1"));
  auto neg = invariance_check(cyc, Translation::T2);
  CHECK_FALSE(neg.invariant);
  CHECK(neg.max_residual > 1e-4);
  CHECK_FALSE(invariance_check(classified_surface("min_horo"), Translation::T1).invariant);
}

TEST_CASE("family specs") {
  FamilySpec spec{"cyclic_P", {{"a", "0"}, {"b", "3"}}, {}, {}};
  auto fb = build_family(spec);
  CHECK(fb.generic_family);
  CHECK(fb.unbound() == std::vector<std::string>{"r"});
  spec.params["r"] = "1 + s^2";
  CHECK(build_family(spec).unbound().empty());
  spec.params["zeta"] = "1";
  CHECK_THROWS_AS(build_family(spec), SpecError);

  FamilySpec bad{"cyclic_P", {{"a", "0"}, {"b", "1"}, {"r", "1"}}, {}, {}};
  CHECK_THROWS_AS(build_family(bad), DomainError);

  FamilySpec leaf{"leaf_R", {{"s", "1/2"}}, {}, {}};
  auto lb = build_family(leaf);
  CHECK(chart_point(lb.chart, 0.1, 0.2).z == doctest::Approx(0.5));

  FamilySpec cls{"min_horo", {{"mu", "2"}}, {}, {}};
  auto cb = build_family(cls);
  CHECK(same(cb.chart.X[2], "log(abs(s + 2))"));
  CHECK_THROWS_AS(build_family(FamilySpec{"torus", {}, {}, {}}), SpecError);
}
