#pragma once

#include <utility>

#include "solv/chart.hpp"
#include "solv/sym/eval.hpp"

namespace solv {

enum class NormalChoice { Preset, Cross };
enum class Direction { S, T };

struct FundamentalData {
  sym::SymExpr E, F, G;
  sym::SymExpr l, m, n;
  sym::SymExpr m_alt;  // <nabla_{X_t} X_s, N>; equals m
  SymTriple normal;
  SymTriple Xs, Xt;
};

// Frame components of the coordinate partials.
std::pair<SymTriple, SymTriple> partials(const SurfaceChart& chart);

// nabla_{X_dir} V for a frame field V along the chart.
SymTriple covariant_derivative(const SymTriple& V, Direction dir, const SurfaceChart& chart);

// Xs x Xt (orientation E1 x E2 = E3), or the chart's preset normal.
SymTriple normal(const SurfaceChart& chart, NormalChoice choice = NormalChoice::Preset);
SymTriple cross(const SymTriple& a, const SymTriple& b);
sym::SymExpr dot(const SymTriple& a, const SymTriple& b);

FundamentalData fundamental_data(const SurfaceChart& chart, NormalChoice choice = NormalChoice::Preset);

// E n - 2 F m + G l and l n - m^2 against the non-unit normal.
sym::SymExpr h_numerator(const FundamentalData& fd);
sym::SymExpr k_numerator(const FundamentalData& fd);
sym::SymExpr h_numerator(const SurfaceChart& chart, NormalChoice choice = NormalChoice::Preset);
sym::SymExpr k_numerator(const SurfaceChart& chart, NormalChoice choice = NormalChoice::Preset);

struct CurvatureValues {
  double H = 0;
  double K = 0;        // (ln - m^2)/(EG - F^2) with the unit normal
  double det_I = 0;    // EG - F^2
};

// Evaluates the symbolic data at points; build once, sample many times.
class CurvatureEvaluator {
 public:
  explicit CurvatureEvaluator(const SurfaceChart& chart, NormalChoice choice = NormalChoice::Preset);
  explicit CurvatureEvaluator(FundamentalData fd);
  CurvatureValues at(double s, double t, const sym::Bindings& b = {}) const;
  const FundamentalData& data() const { return fd_; }

 private:
  FundamentalData fd_;
  sym::SymExpr normal_sq_;
};

constexpr double kDegenerateMetric = 1e-12;

double mean_curvature_numeric(const SurfaceChart& chart, double s, double t, const sym::Bindings& b = {},
                              NormalChoice choice = NormalChoice::Preset);
double gauss_curvature_numeric(const SurfaceChart& chart, double s, double t, const sym::Bindings& b = {},
                               NormalChoice choice = NormalChoice::Preset);

}  // namespace solv
