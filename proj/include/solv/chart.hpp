#pragma once

#include <array>
#include <optional>
#include <string>

#include "solv/sym/expr.hpp"

namespace solv {

struct Interval {
  double lo = -1;
  double hi = 1;
  bool contains(double v) const { return v > lo && v < hi; }
  double width() const { return hi - lo; }
};

// Components on E1, E2, E3 (or coordinate components, by context).
using SymTriple = std::array<sym::SymExpr, 3>;

// (s, t) -> Sol3 in model coordinates.
struct SurfaceChart {
  SymTriple X;
  Interval s_domain;
  Interval t_domain;
  std::string label;
  std::optional<SymTriple> preset_normal;  // frame components
};

}  // namespace solv
