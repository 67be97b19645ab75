#include "solv/sol3.hpp"

#include <cmath>

#include "solv/errors.hpp"

namespace solv {

namespace {
constexpr double kLeafTol = 1e-12;
}

double metric_at(const Sol3Point& p, const CoordVec& u, const CoordVec& v) {
  return std::exp(2 * p.z) * u.dx * v.dx + std::exp(-2 * p.z) * u.dy * v.dy + u.dz * v.dz;
}

Sol3Point group_mul(const Sol3Point& p, const Sol3Point& q) {
  return {p.x + std::exp(-p.z) * q.x, p.y + std::exp(p.z) * q.y, p.z + q.z};
}

Sol3Point group_inverse(const Sol3Point& p) { return {-std::exp(p.z) * p.x, -std::exp(-p.z) * p.y, -p.z}; }

std::array<CoordVec, 3> frame_at(const Sol3Point& p) {
  return {CoordVec{std::exp(-p.z), 0, 0}, CoordVec{0, std::exp(p.z), 0}, CoordVec{0, 0, 1}};
}

FrameVec to_frame(const Sol3Point& p, const CoordVec& v) {
  return {std::exp(p.z) * v.dx, std::exp(-p.z) * v.dy, v.dz};
}

CoordVec to_coord(const Sol3Point& p, const FrameVec& v) {
  return {std::exp(-p.z) * v.c1, std::exp(p.z) * v.c2, v.c3};
}

FrameVec connection(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::invalid_argument("frame index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (i == 1 && j == 1) return {0, 0, -1};
  if (i == 1 && j == 3) return {1, 0, 0};
  if (i == 2 && j == 2) return {0, 0, 1};
  if (i == 2 && j == 3) return {0, -1, 0};
  return {};
}

Sol3Point translate(Translation kind, double c, const Sol3Point& p) {
  switch (kind) {
    case Translation::T1:
      return {p.x + c, p.y, p.z};
    case Translation::T2:
      return {p.x, p.y + c, p.z};
    case Translation::T3:
      return {std::exp(-c) * p.x, std::exp(c) * p.y, p.z + c};
  }
  return p;
}

SurfaceChart leaf_chart(Foliation f, double s) {
  using sym::SymExpr;
  SymExpr c{Rational(s)};
  SurfaceChart chart;
  switch (f) {
    case Foliation::F1:
      chart.X = {c, sym::s_var, sym::t_var};
      chart.label = "P_s";
      break;
    case Foliation::F2:
      chart.X = {sym::s_var, c, sym::t_var};
      chart.label = "Q_s";
      break;
    case Foliation::F3:
      chart.X = {sym::s_var, sym::t_var, c};
      chart.label = "R_s";
      break;
  }
  return chart;
}

PlanePoint phi_s(double s, const Sol3Point& p) {
  if (std::fabs(p.x - s) > kLeafTol) throw DomainError("point is not on the leaf x = " + std::to_string(s));
  return {p.y, std::exp(p.z)};
}

Sol3Point phi_s_inv(double s, const PlanePoint& q) {
  if (!(q.v > 0)) throw DomainError("half-plane point needs v > 0");
  return {s, q.u, std::log(q.v)};
}

PlanePoint psi_s(double s, const Sol3Point& p) {
  if (std::fabs(p.z - s) > kLeafTol) throw DomainError("point is not on the leaf z = " + std::to_string(s));
  return {std::exp(s) * p.x, std::exp(-s) * p.y};
}

Sol3Point psi_s_inv(double s, const PlanePoint& q) { return {std::exp(-s) * q.u, std::exp(s) * q.v, s}; }

const char* to_string(Translation t) {
  switch (t) {
    case Translation::T1:
      return "T1";
    case Translation::T2:
      return "T2";
    case Translation::T3:
      return "T3";
  }
  return "?";
}

Translation parse_translation(const std::string& name) {
  if (name == "T1") return Translation::T1;
  if (name == "T2") return Translation::T2;
  if (name == "T3") return Translation::T3;
  throw SpecError("unknown translation " + name);
}

}  // namespace solv
