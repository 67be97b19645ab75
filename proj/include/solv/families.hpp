#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/chart.hpp"
#include "solv/sol3.hpp"
#include "solv/sym/eval.hpp"

namespace solv {

enum class CurveKind { Circle, Horocycle, Equidistant, Geodesic };
const char* to_string(CurveKind k);
CurveKind kind_from_curvature(double kappa);

// Euclidean data (a, b, r) of the half-plane image of a curve in P_s.
struct CircleInfo {
  double s = 0, a = 0, b = 0, r = 0;
  std::optional<PlanePoint> center;  // hyperbolic center, circles only
  std::optional<double> hyperbolic_radius;
  double curvature = 0;  // b / r
  CurveKind kind = CurveKind::Circle;
};

struct SpaceCurve {
  SymTriple X;  // functions of t
  Interval t_domain;
  std::string label;
  Sol3Point at(double t) const;
};

// (s, a + r cos t, log(b + r sin t)); requires r > 0 and b > r.
std::pair<SpaceCurve, CircleInfo> circle_curve(double s, double a, double b, double r);
// Same parametrization for any b >= 0; the t-domain keeps b + r sin t > 0.
std::pair<SpaceCurve, CircleInfo> generalized_circle_curve(double s, double a, double b, double r);

enum class LineKind { Geodesic, Equidistant, Horocycle };
const char* to_string(LineKind k);

// geodesic (s, a, log t), equidistant (s, t, log(a t + b)), horocycle (s, t, log a)
SpaceCurve line_curve(LineKind kind, double s, double a, double b = 0);

// (s, a + r cos t, log(b + r sin t)) with the matching normal preset.
SurfaceChart cyclic_chart(const sym::SymExpr& a, const sym::SymExpr& b, const sym::SymExpr& r);
// Circle centers as Sol3 points, (s, a, log sqrt(b^2 - r^2)).
SymTriple line_of_centers(const sym::SymExpr& a, const sym::SymExpr& b, const sym::SymExpr& r);
// The same centers in the half-plane, (a, sqrt(b^2 - r^2)).
std::pair<sym::SymExpr, sym::SymExpr> line_of_centers_half_plane(const sym::SymExpr& a, const sym::SymExpr& b,
                                                                 const sym::SymExpr& r);

// (s, a, t), (s, t, log(a t + b)) or (s, t, a) with the matching normal preset.
SurfaceChart foliated_chart(LineKind kind, const sym::SymExpr& a, const sym::SymExpr& b = sym::SymExpr());

// (a + r e^{-s} cos t, b + r e^s sin t, s) with the matching normal preset.
SurfaceChart zplane_cyclic_chart(const sym::SymExpr& a, const sym::SymExpr& b, const sym::SymExpr& r);

using ParamMap = std::map<std::string, Rational>;

enum class SurfaceClass { Minimal, Flat, Informational };

struct ClassifiedInfo {
  std::string id;
  SurfaceClass cls;
  LineKind foliation;
  std::vector<Translation> claimed_invariance;  // as stated alongside the theorems
  ParamMap defaults;
};

const std::vector<ClassifiedInfo>& classified_catalogue();
const ClassifiedInfo& classified_info(const std::string& id);

// Charts of the classified minimal and flat surfaces, parameters bound to
// rationals; missing parameters take the catalogue defaults.
SurfaceChart classified_surface(const std::string& id, const ParamMap& params = {});

struct InvarianceReport {
  bool invariant = false;
  double max_residual = 0;
  int samples = 0;
  std::string detail;
};

// Translates sampled chart points and checks that each lands back on the
// chart image (parameters matched by damped Gauss-Newton).
InvarianceReport invariance_check(const SurfaceChart& chart, Translation kind, const sym::Bindings& b = {},
                                  std::uint64_t seed = 7, int samples = 12);

struct FamilySpec {
  std::string family;
  std::map<std::string, std::string> params;
  std::optional<Interval> s_domain;
  std::optional<Interval> t_domain;
};

// A spec resolved into a chart. `generic` keeps a, b, r symbolic;
// `chart` has every binding from the spec substituted.
struct FamilyBuild {
  std::string family;
  bool generic_family = false;  // a, b, r enter as function symbols
  SurfaceChart generic;
  SurfaceChart chart;
  std::map<std::string, sym::SymExpr> functions;
  ParamMap params;
  bool trig_family = false;  // coefficients live on the cos/sin basis

  // Function symbols still free in `chart`.
  std::vector<std::string> unbound() const;
};

FamilyBuild build_family(const FamilySpec& spec);

// Substitutes function bindings and parameter values into a chart.
SurfaceChart bind_chart(const SurfaceChart& chart, const std::map<std::string, sym::SymExpr>& functions,
                        const ParamMap& params);

// Replaces each |u| by u or -u, whichever holds on a grid over the chart
// domain; abs forms whose sign changes there are left alone.
SurfaceChart resolve_chart_abs(const SurfaceChart& chart, const sym::Bindings& b = {});

Sol3Point chart_point(const SurfaceChart& chart, double s, double t, const sym::Bindings& b = {});

}  // namespace solv
