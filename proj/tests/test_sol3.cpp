#include <doctest.h>

#include <cmath>
#include <random>

#include "solv/errors.hpp"
#include "solv/sol3.hpp"
#include "solv/sym.hpp"

using namespace solv;

namespace {

const double e1 = std::exp(1.0);

void check_point(const Sol3Point& p, double x, double y, double z, double tol = 1e-14) {
  CHECK(p.x == doctest::Approx(x).epsilon(tol));
  CHECK(p.y == doctest::Approx(y).epsilon(tol));
  CHECK(p.z == doctest::Approx(z).epsilon(tol));
}

Sol3Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2, 2);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("metric values") {
  CHECK(metric_at({0, 0, 0}, {1, 0, 0}, {1, 0, 0}) == 1);
  CHECK(metric_at({0, 0, 0}, {1, 0, 0}, {0, 1, 0}) == 0);
  CHECK(metric_at({0, 0, 1}, {1, 0, 0}, {1, 0, 0}) == doctest::Approx(7.389056).epsilon(1e-7));
  CHECK(metric_at({0, 0, 1}, {0, 1, 0}, {0, 1, 0}) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("group law") {
  check_point(group_mul({0, 0, 0}, {1.5, -2, 0.3}), 1.5, -2, 0.3);
  check_point(group_mul({0, 0, 1}, {1, 0, 0}), 1 / e1, 0, 1);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto p = random_point(rng), q = random_point(rng), r = random_point(rng);
    auto lhs = group_mul(group_mul(p, q), r), rhs = group_mul(p, group_mul(q, r));
    check_point(lhs, rhs.x, rhs.y, rhs.z, 1e-12);
    auto id = group_mul(p, group_inverse(p));
    CHECK(std::fabs(id.x) + std::fabs(id.y) + std::fabs(id.z) < 1e-12);
  }
}

TEST_CASE("frame is orthonormal") {
  auto f0 = frame_at({0, 0, 0});
  CHECK(f0[0].dx == 1);
  CHECK(f0[1].dy == 1);
  CHECK(f0[2].dz == 1);
  CHECK(frame_at({0, 0, 1})[0].dx == doctest::Approx(1 / e1));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    auto p = random_point(rng);
    auto f = frame_at(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::fabs(metric_at(p, f[i], f[j]) - (i == j)) < 1e-12);
    CoordVec v{0.3, -1.1, 2.0};
    auto back = to_coord(p, to_frame(p, v));
    CHECK(back.dx == doctest::Approx(v.dx));
    CHECK(back.dy == doctest::Approx(v.dy));
    CHECK(back.dz == doctest::Approx(v.dz));
  }
}

TEST_CASE("connection table") {
  CHECK(connection(1, 1) == FrameVec{0, 0, -1});
  CHECK(connection(1, 3) == FrameVec{1, 0, 0});
  CHECK(connection(2, 2) == FrameVec{0, 0, 1});
  CHECK(connection(2, 3) == FrameVec{0, -1, 0});
  CHECK(connection(3, 3) == FrameVec{0, 0, 0});
  CHECK(connection(3, 1) == FrameVec{0, 0, 0});
  CHECK(connection(1, 2) == FrameVec{0, 0, 0});
  CHECK_THROWS_AS(connection(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(connection(1, 4), std::invalid_argument);
}

TEST_CASE("translations") {
  check_point(translate(Translation::T3, 1, {1, 1, 0}), 1 / e1, e1, 1);
  check_point(translate(Translation::T1, 2, {1, 1, 0}), 3, 1, 0);
  check_point(translate(Translation::T2, -1, {1, 1, 0}), 1, 0, 0);
  for (auto k : {Translation::T1, Translation::T2, Translation::T3}) check_point(translate(k, 0, {0.2, -0.4, 0.7}), 0.2, -0.4, 0.7);
  CHECK(parse_translation("T2") == Translation::T2);
  CHECK_THROWS_AS(parse_translation("T4"), SpecError);
}

TEST_CASE("translations preserve the metric") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  const double h = 1e-6;
  for (auto kind : {Translation::T1, Translation::T2, Translation::T3}) {
    for (int n = 0; n < 10; ++n) {
      auto p = random_point(rng);
      double cc = c(rng);
      CoordVec u{0.4, -0.7, 1.2}, v{-1.0, 0.5, 0.3};
      auto push = [&](const CoordVec& w) {
        auto a = translate(kind, cc, {p.x + h * w.dx, p.y + h * w.dy, p.z + h * w.dz});
        auto b = translate(kind, cc, {p.x - h * w.dx, p.y - h * w.dy, p.z - h * w.dz});
        return CoordVec{(a.x - b.x) / (2 * h), (a.y - b.y) / (2 * h), (a.z - b.z) / (2 * h)};
      };
      auto q = translate(kind, cc, p);
      CHECK(std::fabs(metric_at(q, push(u), push(v)) - metric_at(p, u, v)) < 1e-8);
    }
  }
}

TEST_CASE("leaf charts") {
  auto p = leaf_chart(Foliation::F1, 0);
  CHECK(sym::eval(p.X[0], 0.3, 0.4) == 0);
  CHECK(sym::eval(p.X[1], 0.3, 0.4) == doctest::Approx(0.3));
  CHECK(sym::eval(p.X[2], 0.3, 0.4) == doctest::Approx(0.4));
  auto r = leaf_chart(Foliation::F3, 0);
  CHECK(sym::eval(r.X[0], 0.3, 0.4) == doctest::Approx(0.3));
  CHECK(sym::eval(r.X[1], 0.3, 0.4) == doctest::Approx(0.4));
  CHECK(sym::eval(r.X[2], 0.3, 0.4) == 0);
  auto q = leaf_chart(Foliation::F2, 1.5);
  CHECK(sym::eval(q.X[1], 0.3, 0.4) == doctest::Approx(1.5));
}

TEST_CASE("phi_s maps P_s to the half-plane") {
  auto q = phi_s(0.7, {0.7, 0, 0});
  CHECK(q.u == doctest::Approx(0));
  CHECK(q.v == doctest::Approx(1));
  auto p = phi_s_inv(0.7, {0.3, 2.0});
  check_point(p, 0.7, 0.3, std::log(2.0));
  CHECK_THROWS_AS(phi_s(0, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(phi_s_inv(0, {0, 0}), DomainError);
  CHECK_THROWS_AS(phi_s_inv(0, {0, -1}), DomainError);
}

TEST_CASE("phi_s is an isometry onto the hyperbolic plane") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 0; n < 10; ++n) {
    double s = u(rng);
    Sol3Point p{s, u(rng), u(rng)};
    CoordVec w{0, 0.6, -0.8};
    // Pushforward of (0, wy, wz) under (y, z) -> (y, e^z) is (wy, e^z wz).
    double v = std::exp(p.z);
    double hyp = (w.dy * w.dy + v * v * w.dz * w.dz) / (v * v);
    CHECK(std::fabs(hyp - metric_at(p, w, w)) < 1e-12);
  }
}

TEST_CASE("psi_s maps R_s to the Euclidean plane") {
  auto q = psi_s(0, {0.4, -0.2, 0});
  CHECK(q.u == doctest::Approx(0.4));
  CHECK(q.v == doctest::Approx(-0.2));
  auto q1 = psi_s(1, {1, 1, 1});
  CHECK(q1.u == doctest::Approx(e1));
  CHECK(q1.v == doctest::Approx(1 / e1));
  check_point(psi_s_inv(1, q1), 1, 1, 1);
  CHECK_THROWS_AS(psi_s(0, {1, 1, 0.5}), DomainError);
}
