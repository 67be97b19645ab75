#pragma once

#include <array>
#include <string>
#include <vector>

#include "solv/chart.hpp"
#include "solv/sol3.hpp"
#include "solv/sym/eval.hpp"

namespace solv {

enum class AmbientMetric { Sol3, Euclidean };

struct FDConfig {
  double h = 1e-4;
  bool extrapolation = true;  // Richardson on steps h and h/2
  AmbientMetric metric = AmbientMetric::Sol3;
};

// gamma[k][i][j] = Gamma^k_ij of the coordinate metric.
using Christoffel = std::array<std::array<std::array<double, 3>, 3>, 3>;

// Coordinate metric components at p, from metric_at (or the identity).
std::array<std::array<double, 3>, 3> metric_matrix(const Sol3Point& p, AmbientMetric m);

// Central differences of the metric components; no connection table.
Christoffel christoffel_fd(const Sol3Point& p, const FDConfig& cfg = {});

// nabla_{E_i} E_j in frame components, assembled from christoffel_fd.
FrameVec frame_connection_fd(const Sol3Point& p, int i, int j, const FDConfig& cfg = {});

// max |d_k g_ij - Gamma^l_ki g_lj - Gamma^l_kj g_il|
double metric_compatibility_fd(const Sol3Point& p, const FDConfig& cfg = {});

struct OracleCurvature {
  double H = 0;
  double K_paper = 0;  // (ln - m^2)/(EG - F^2)
  double det_I = 0;
};

// Finite differences of the embedding; the unit normal is the metric cross
// product Xs x Xt. Evaluates the chart components only.
OracleCurvature curvatures_fd(const SurfaceChart& chart, double s, double t, const sym::Bindings& b = {},
                              const FDConfig& cfg = {});

// Gauss curvature of the induced metric from E, F, G alone (Brioschi).
double intrinsic_gauss_fd(const SurfaceChart& chart, double s, double t, const sym::Bindings& b = {},
                          const FDConfig& cfg = {});

struct OdeCase {
  std::string id;
  std::string function;      // the unknown, a or b
  sym::SymExpr residual;     // in the unknown, its derivatives and s
  sym::SymExpr solution;     // claimed closed form in s
  Interval domain;
  std::string description;
};

const std::vector<OdeCase>& ode_catalogue();
const OdeCase& ode_case(const std::string& id);

struct OdeResult {
  sym::SymExpr symbolic;  // residual after substitution; canonical 0 when the solution holds
  double max_abs = 0;     // numeric, at the samples
};

// Samples must lie inside the case's domain.
OdeResult ode_residual(const OdeCase& c, const std::vector<double>& samples);
std::vector<double> ode_samples(const OdeCase& c, int n = 25);

}  // namespace solv
