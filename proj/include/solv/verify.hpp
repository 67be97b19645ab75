#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solv/curvature.hpp"
#include "solv/families.hpp"

namespace solv {

struct Check {
  std::string name;
  std::string kind;  // symbolic | numeric
  std::string expected;
  std::string got;
  bool pass = false;
};

// Constants the gate does not depend on, compared against stated values.
struct Note {
  std::string name;
  std::string expected;
  std::string got;
  bool match = false;
};

struct VerificationReport {
  std::string theorem;
  std::vector<Check> checks;
  std::vector<Note> notes;
  bool pass = true;
  double wall_ms = 0;
};

struct VerifyOptions {
  double grid_tol = 1e-8;  // |H| or |K| on classified grids
  double ode_tol = 1e-10;   // numeric ODE residuals
  NormalChoice normal = NormalChoice::Preset;
  std::uint64_t seed = 7;
};

VerificationReport verify(const std::string& theorem, const VerifyOptions& opt = {});

// Pieces shared with the acceptance run.
struct GridStats {
  double max_abs_H = 0;
  double max_abs_K = 0;
  int points = 0;
};
GridStats curvature_grid(const SurfaceChart& chart, int n = 20, NormalChoice choice = NormalChoice::Preset);

// h_numerator (minimal ids) or k_numerator (flat ids) after abs resolution.
sym::SymExpr defining_numerator(const std::string& id, NormalChoice choice = NormalChoice::Preset);

}  // namespace solv
