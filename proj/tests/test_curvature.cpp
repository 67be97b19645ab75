#include <doctest.h>

#include <cmath>
#include <random>

#include "solv/curvature.hpp"
#include "solv/errors.hpp"
#include "solv/families.hpp"
#include "solv/sym.hpp"

using namespace solv;
using namespace solv::sym;

namespace {

bool same(const SymExpr& a, const SymExpr& b) { return normalize(a - b).is_zero(); }
bool same(const SymExpr& a, const char* b) { return same(a, parse(b)); }

SymExpr fa() { return SymExpr::func("a"); }
SymExpr fb() { return SymExpr::func("b"); }
SymExpr fr() { return SymExpr::func("r"); }

SurfaceChart cyclic() { return cyclic_chart(fa(), fb(), fr()); }

bool triple_is(const SymTriple& v, const char* c1, const char* c2, const char* c3) {
  return same(v[0], c1) && same(v[1], c2) && same(v[2], c3);
}

}  // namespace

TEST_CASE("partials of the cyclic chart") {
  auto [xs, xt] = partials(cyclic());
  CHECK(same(xs[0], "b + r*sin(t)"));
  CHECK(same(xs[1], "(a' + r'*cos(t))/(b + r*sin(t))"));
  CHECK(same(xs[2], "(b' + r'*sin(t))/(b + r*sin(t))"));
  CHECK(xt[0].is_zero());
  CHECK(same(xt[1], "-r*sin(t)/(b + r*sin(t))"));
  CHECK(same(xt[2], "r*cos(t)/(b + r*sin(t))"));
}

TEST_CASE("partials of the horocycle chart and the flat leaf") {
  auto [xs, xt] = partials(foliated_chart(LineKind::Horocycle, fa()));
  CHECK(triple_is(xs, "exp(a)", "0", "a'"));
  CHECK(triple_is(xt, "0", "exp(-a)", "0"));
  auto [ls, lt] = partials(leaf_chart(Foliation::F3, 0));
  CHECK(triple_is(ls, "1", "0", "0"));
  CHECK(triple_is(lt, "0", "1", "0"));
}

TEST_CASE("covariant derivative folds the connection table") {
  auto leaf = leaf_chart(Foliation::F3, 0);
  SymTriple e1{SymExpr(1), SymExpr(), SymExpr()};
  SymTriple e3{SymExpr(), SymExpr(), SymExpr(1)};
  CHECK(triple_is(covariant_derivative(e1, Direction::S, leaf), "0", "0", "-1"));
  CHECK(triple_is(covariant_derivative(e3, Direction::S, leaf), "1", "0", "0"));
  CHECK(triple_is(covariant_derivative(e3, Direction::T, leaf), "0", "-1", "0"));
}

TEST_CASE("normals") {
  CHECK(triple_is(normal(leaf_chart(Foliation::F3, 0), NormalChoice::Cross), "0", "0", "1"));
  auto c = cyclic();
  CHECK(triple_is(normal(c), "(r' + a'*cos(t) + b'*sin(t))/(b + r*sin(t))^2", "-cos(t)", "-sin(t)"));
  auto x = cross(normal(c, NormalChoice::Preset), normal(c, NormalChoice::Cross));
  for (auto& comp : x) CHECK(normalize(comp).is_zero());
}

TEST_CASE("every preset normal is orthogonal to the partials") {
  std::vector<SurfaceChart> charts{cyclic(), foliated_chart(LineKind::Geodesic, fa()),
                                   foliated_chart(LineKind::Equidistant, fa(), fb()),
                                   foliated_chart(LineKind::Horocycle, fa()), zplane_cyclic_chart(fa(), fb(), fr())};
  for (auto& c : charts) {
    CAPTURE(c.label);
    REQUIRE(c.preset_normal);
    auto [xs, xt] = partials(c);
    CHECK(normalize(dot(*c.preset_normal, xs)).is_zero());
    CHECK(normalize(dot(*c.preset_normal, xt)).is_zero());
  }
}

TEST_CASE("fundamental forms of the leaves") {
  auto r = fundamental_data(leaf_chart(Foliation::F3, 0), NormalChoice::Cross);
  CHECK(same(r.E, "1"));
  CHECK(r.F.is_zero());
  CHECK(same(r.G, "1"));
  CHECK(same(r.l, "-1"));
  CHECK(normalize(r.m).is_zero());
  CHECK(same(r.n, "1"));
  auto p = fundamental_data(leaf_chart(Foliation::F1, 0.5), NormalChoice::Cross);
  CHECK(normalize(p.l).is_zero());
  CHECK(normalize(p.m).is_zero());
  CHECK(normalize(p.n).is_zero());
  auto h = fundamental_data(foliated_chart(LineKind::Horocycle, fa()));
  CHECK(same(h.E, "exp(2*a) + a'^2"));
  CHECK(normalize(h.F).is_zero());
  CHECK(same(h.G, "exp(-2*a)"));
}

TEST_CASE("m agrees in both orders") {
  for (auto c : {cyclic(), zplane_cyclic_chart(fa(), fb(), fr()), foliated_chart(LineKind::Equidistant, fa(), fb())}) {
    CAPTURE(c.label);
    for (auto choice : {NormalChoice::Preset, NormalChoice::Cross}) {
      auto fd = fundamental_data(c, choice);
      CHECK(normalize(fd.m - fd.m_alt).is_zero());
    }
  }
}

TEST_CASE("first fundamental form is nonnegative on the domain") {
  auto c = cyclic_chart(parse("s/3"), parse("2 + s^2"), parse("1 + s/4"));
  CurvatureEvaluator ev(c);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      double s = -0.9 + 0.2 * i, t = -3 + 0.75 * j;
      CHECK(eval(ev.data().E, s, t) >= 0);
      CHECK(eval(ev.data().G, s, t) >= 0);
    }
}

TEST_CASE("h numerator vanishing") {
  CHECK(normalize(h_numerator(leaf_chart(Foliation::F3, 0.3), NormalChoice::Cross)).is_zero());
  auto q = to_quasipoly(h_numerator(foliated_chart(LineKind::Geodesic, fa())));
  REQUIRE(!q.form.terms.empty());
  for (auto& term : q.form.terms) CHECK(cofactor(term.coefficient, SymExpr::func("a", 2)));
  auto f = to_fourier(h_numerator(cyclic()));
  CHECK(f.form.k == 5);
  CHECK(normalize(f.form.a(5)).is_zero());
  auto c = constant_ratio(f.form.b(5), parse("r^6"));
  REQUIRE(c);
  CHECK(*c != 0);
}

TEST_CASE("k numerator vanishing") {
  CHECK(normalize(k_numerator(leaf_chart(Foliation::F1, 0), NormalChoice::Cross)).is_zero());
  auto f = to_fourier(k_numerator(cyclic()));
  CHECK(f.form.k == 5);
  auto c = constant_ratio(f.form.b(5), parse("b*r^5"));
  REQUIRE(c);
  CHECK(*c != 0);

  // Expand generically, then specialize, so the cleared denominator stays (b + r sin t)^5.
  auto flat = specialize(f, "b", SymExpr());
  auto c4 = constant_ratio(flat.form.a(4), parse("r^2*a'^2"));
  REQUIRE(c4);
  CHECK(*c4 != 0);
}

TEST_CASE("numeric curvature on leaves") {
  auto r = leaf_chart(Foliation::F3, 0.4);
  auto p = leaf_chart(Foliation::F1, -0.2);
  auto q = leaf_chart(Foliation::F2, 0.7);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 0; n < 10; ++n) {
    double s = u(rng), t = u(rng);
    CHECK(std::fabs(mean_curvature_numeric(r, s, t, {}, NormalChoice::Cross)) < 1e-10);
    CHECK(std::fabs(gauss_curvature_numeric(r, s, t, {}, NormalChoice::Cross) + 1) < 1e-8);
    CHECK(std::fabs(gauss_curvature_numeric(p, s, t, {}, NormalChoice::Cross)) < 1e-10);
    CHECK(std::fabs(gauss_curvature_numeric(q, s, t, {}, NormalChoice::Cross)) < 1e-10);
  }
}

TEST_CASE("numeric curvature on classified solutions") {
  // The horocycle chart (s, t, lambda - log|s + mu|) solves a'' = a'^2.
  auto fixed = resolve_chart_abs(classified_surface("min_horo_corrected"));
  auto flat = resolve_chart_abs(classified_surface("flat_horo"));
  for (double s : {-0.5, 0.0, 0.4})
    for (double t : {-0.5, 0.3}) {
      CHECK(std::fabs(mean_curvature_numeric(fixed, s, t)) < 1e-8);
      CHECK(std::fabs(gauss_curvature_numeric(flat, s, t)) < 1e-8);
    }
}

TEST_CASE("tilted plane regression values") {
  // (s, t, s) at the origin; pinned by the finite-difference oracle.
  SurfaceChart c;
  c.X = {s_var, t_var, s_var};
  CHECK(mean_curvature_numeric(c, 0, 0, {}, NormalChoice::Cross) ==
        doctest::Approx(-1 / (4 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(gauss_curvature_numeric(c, 0, 0, {}, NormalChoice::Cross) == doctest::Approx(-0.75).epsilon(1e-12));
}

TEST_CASE("evaluator rejects a degenerate metric") {
  SurfaceChart c;
  c.X = {s_var, s_var, SymExpr()};
  CHECK_THROWS_AS(mean_curvature_numeric(c, 0.1, 0.2, {}, NormalChoice::Cross), SingularityError);
}
