#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "solv/families.hpp"
#include "solv/sym/forms.hpp"
#include "solv/verify.hpp"

namespace solv {

// {"family": ..., "params": {...}, "s_domain": [lo, hi], "t_domain": [lo, hi]}
FamilySpec parse_family_spec(const std::string& json_text);
FamilySpec family_spec_from_json(const nlohmann::json& j);

enum class Target { H, K };
Target parse_target(const std::string& name);
NormalChoice parse_normal(const std::string& name);

struct Expansion {
  Target target = Target::H;
  std::optional<sym::FourierExpansion> fourier;
  std::optional<sym::QuasiPolyExpansion> quasi;
};

// Coefficient form of the H- or K-numerator. Cyclic families expand the
// generic chart and then substitute the bindings, so the clearing is the
// generic one.
Expansion expand(const FamilyBuild& fb, Target target, NormalChoice normal = NormalChoice::Preset);

enum class CurvatureMethod { Symbolic, Numeric, Oracle };
CurvatureMethod parse_method(const std::string& name);

struct CurvaturePoint {
  double s = 0, t = 0;
  double H = 0, K_paper = 0;
  std::optional<double> K_intrinsic;
};

CurvaturePoint curvature_at(const FamilyBuild& fb, double s, double t, CurvatureMethod method,
                            NormalChoice normal = NormalChoice::Preset);

// OBJ text: v lines in row-major (s outer, t inner) order, then triangles.
// With `curve`, a single polyline at the middle of the s-domain.
std::string mesh_obj(const FamilyBuild& fb, int nu, int nv, bool curve = false);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const Expansion& e, const std::string& family);
nlohmann::json to_json(const CurvaturePoint& p, CurvatureMethod method);

std::string pretty(const VerificationReport& r);
std::string pretty(const Expansion& e, const std::string& family);
std::string pretty(const CurvaturePoint& p, CurvatureMethod method);

}  // namespace solv
