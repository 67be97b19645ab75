#pragma once

#include <array>

#include "solv/chart.hpp"

namespace solv {

struct Sol3Point {
  double x = 0, y = 0, z = 0;
};

struct CoordVec {
  double dx = 0, dy = 0, dz = 0;
};

struct FrameVec {
  double c1 = 0, c2 = 0, c3 = 0;
  friend bool operator==(const FrameVec&, const FrameVec&) = default;
};

// e^{2z} dx^2 + e^{-2z} dy^2 + dz^2
double metric_at(const Sol3Point& p, const CoordVec& u, const CoordVec& v);

// (x + e^{-z} x', y + e^{z} y', z + z')
Sol3Point group_mul(const Sol3Point& p, const Sol3Point& q);
Sol3Point group_inverse(const Sol3Point& p);

// E1 = e^{-z} d/dx, E2 = e^{z} d/dy, E3 = d/dz
std::array<CoordVec, 3> frame_at(const Sol3Point& p);
FrameVec to_frame(const Sol3Point& p, const CoordVec& v);
CoordVec to_coord(const Sol3Point& p, const FrameVec& v);

// Frame components of nabla_{E_i} E_j, i and j in 1..3.
FrameVec connection(int i, int j);

enum class Translation { T1, T2, T3 };
Sol3Point translate(Translation kind, double c, const Sol3Point& p);

// P_s: x = s, Q_s: y = s, R_s: z = s
enum class Foliation { F1, F2, F3 };
SurfaceChart leaf_chart(Foliation f, double s);

struct PlanePoint {
  double u = 0, v = 0;
};

// P_s -> upper half-plane, (y, z) -> (y, e^z)
PlanePoint phi_s(double s, const Sol3Point& p);
Sol3Point phi_s_inv(double s, const PlanePoint& q);

// R_s -> Euclidean plane, (x, y) -> (e^s x, e^{-s} y)
PlanePoint psi_s(double s, const Sol3Point& p);
Sol3Point psi_s_inv(double s, const PlanePoint& q);

const char* to_string(Translation t);
Translation parse_translation(const std::string& name);

}  // namespace solv
