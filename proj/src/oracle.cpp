#include "solv/oracle.hpp"

#include <cmath>
#include <functional>

#include "solv/errors.hpp"
#include "solv/sym/eval.hpp"

namespace solv {

namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

void check_config(const FDConfig& cfg) {
  if (!(cfg.h > 0 && cfg.h < 1e-2)) throw SpecError("finite-difference step must lie in (0, 1e-2)");
}

// Central first difference, with one Richardson step when enabled.
double diff1(const std::function<double(double)>& f, double h, bool richardson) {
  auto d = [&](double k) { return (f(k) - f(-k)) / (2 * k); };
  return richardson ? (4 * d(h / 2) - d(h)) / 3 : d(h);
}

double diff2(const std::function<double(double)>& f, double h, bool richardson) {
  double f0 = f(0);
  auto d = [&](double k) { return (f(k) - 2 * f0 + f(-k)) / (k * k); };
  return richardson ? (4 * d(h / 2) - d(h)) / 3 : d(h);
}

double diff_mixed(const std::function<double(double, double)>& f, double h, bool richardson) {
  auto d = [&](double k) { return (f(k, k) - f(k, -k) - f(-k, k) + f(-k, -k)) / (4 * k * k); };
  return richardson ? (4 * d(h / 2) - d(h)) / 3 : d(h);
}

Sol3Point shifted(const Sol3Point& p, int axis, double d) {
  Sol3Point q = p;
  (axis == 0 ? q.x : axis == 1 ? q.y : q.z) += d;
  return q;
}

Mat3 inverse(const Mat3& m) {
  double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det == 0) throw SingularityError("singular metric");
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / det;
    }
  return r;
}

double gdot(const Mat3& g, const Vec3& u, const Vec3& v) {
  double acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += g[i][j] * u[i] * v[j];
  return acc;
}

// Embedding derivatives at (s, t) by finite differences of the chart.
struct Jet {
  Vec3 X, Xs, Xt, Xss, Xst, Xtt;
};

Jet jet(const SurfaceChart& chart, double s, double t, const sym::Bindings& b, const FDConfig& cfg) {
  Jet j;
  double h1 = cfg.h, h2 = 10 * cfg.h;
  bool r = cfg.extrapolation;
  for (int k = 0; k < 3; ++k) {
    const sym::SymExpr& e = chart.X[static_cast<std::size_t>(k)];
    j.X[k] = sym::eval(e, s, t, b);
    j.Xs[k] = diff1([&](double d) { return sym::eval(e, s + d, t, b); }, h1, r);
    j.Xt[k] = diff1([&](double d) { return sym::eval(e, s, t + d, b); }, h1, r);
    j.Xss[k] = diff2([&](double d) { return sym::eval(e, s + d, t, b); }, h2, r);
    j.Xtt[k] = diff2([&](double d) { return sym::eval(e, s, t + d, b); }, h2, r);
    j.Xst[k] = diff_mixed([&](double d, double f) { return sym::eval(e, s + d, t + f, b); }, h2, r);
  }
  return j;
}

struct FirstForm {
  double E, F, G;
};

FirstForm first_form(const SurfaceChart& chart, double s, double t, const sym::Bindings& b, const FDConfig& cfg) {
  Vec3 X, Xs, Xt;
  for (int k = 0; k < 3; ++k) {
    const sym::SymExpr& e = chart.X[static_cast<std::size_t>(k)];
    X[k] = sym::eval(e, s, t, b);
    Xs[k] = diff1([&](double d) { return sym::eval(e, s + d, t, b); }, cfg.h, cfg.extrapolation);
    Xt[k] = diff1([&](double d) { return sym::eval(e, s, t + d, b); }, cfg.h, cfg.extrapolation);
  }
  Mat3 g = metric_matrix({X[0], X[1], X[2]}, cfg.metric);
  return {gdot(g, Xs, Xs), gdot(g, Xs, Xt), gdot(g, Xt, Xt)};
}

}  // namespace

Mat3 metric_matrix(const Sol3Point& p, AmbientMetric m) {
  Mat3 g{};
  if (m == AmbientMetric::Euclidean) {
    for (int i = 0; i < 3; ++i) g[i][i] = 1;
    return g;
  }
  const CoordVec basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = metric_at(p, basis[i], basis[j]);
  return g;
}

Christoffel christoffel_fd(const Sol3Point& p, const FDConfig& cfg) {
  check_config(cfg);
  // dg[l][i][j] = d_l g_ij
  std::array<Mat3, 3> dg;
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        dg[l][i][j] = diff1([&](double d) { return metric_matrix(shifted(p, l, d), cfg.metric)[i][j]; }, cfg.h,
                            cfg.extrapolation);
  Mat3 ginv = inverse(metric_matrix(p, cfg.metric));
  Christoffel gamma{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double acc = 0;
        for (int l = 0; l < 3; ++l) acc += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = acc / 2;
      }
  return gamma;
}

FrameVec frame_connection_fd(const Sol3Point& p, int i, int j, const FDConfig& cfg) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("frame index must be 1, 2 or 3");
  check_config(cfg);
  auto comps = [](const CoordVec& v) { return Vec3{v.dx, v.dy, v.dz}; };
  Vec3 Ei = comps(frame_at(p)[static_cast<std::size_t>(i - 1)]);
  Vec3 Ej = comps(frame_at(p)[static_cast<std::size_t>(j - 1)]);
  Christoffel gamma = christoffel_fd(p, cfg);
  Vec3 out{};
  for (int k = 0; k < 3; ++k) {
    // directional derivative of E_j^k along E_i
    out[k] = diff1(
        [&](double d) {
          Sol3Point q{p.x + d * Ei[0], p.y + d * Ei[1], p.z + d * Ei[2]};
          return comps(frame_at(q)[static_cast<std::size_t>(j - 1)])[k];
        },
        cfg.h, cfg.extrapolation);
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) out[k] += gamma[k][a][c] * Ei[a] * Ej[c];
  }
  return to_frame(p, {out[0], out[1], out[2]});
}

double metric_compatibility_fd(const Sol3Point& p, const FDConfig& cfg) {
  check_config(cfg);
  Christoffel gamma = christoffel_fd(p, cfg);
  Mat3 g = metric_matrix(p, cfg.metric);
  double worst = 0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = diff1([&](double d) { return metric_matrix(shifted(p, k, d), cfg.metric)[i][j]; }, cfg.h,
                         cfg.extrapolation);
        for (int l = 0; l < 3; ++l) v -= gamma[l][k][i] * g[l][j] + gamma[l][k][j] * g[i][l];
        worst = std::max(worst, std::fabs(v));
      }
  return worst;
}

OracleCurvature curvatures_fd(const SurfaceChart& chart, double s, double t, const sym::Bindings& b,
                              const FDConfig& cfg) {
  check_config(cfg);
  Jet j = jet(chart, s, t, b, cfg);
  Sol3Point p{j.X[0], j.X[1], j.X[2]};
  Mat3 g = metric_matrix(p, cfg.metric);
  Mat3 ginv = inverse(g);
  Christoffel gamma = christoffel_fd(p, cfg);

  double E = gdot(g, j.Xs, j.Xs), F = gdot(g, j.Xs, j.Xt), G = gdot(g, j.Xt, j.Xt);
  double det = E * G - F * F;
  if (!(det > 1e-12)) throw SingularityError("degenerate first fundamental form");

  // The covector Xs x Xt annihilates both partials; raise it with g^{-1}.
  Vec3 w{j.Xs[1] * j.Xt[2] - j.Xs[2] * j.Xt[1], j.Xs[2] * j.Xt[0] - j.Xs[0] * j.Xt[2],
         j.Xs[0] * j.Xt[1] - j.Xs[1] * j.Xt[0]};
  Vec3 N{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) N[k] += ginv[k][l] * w[l];
  double len = std::sqrt(gdot(g, N, N));
  for (double& c : N) c /= len;

  auto nabla = [&](const Vec3& second, const Vec3& u, const Vec3& v) {
    Vec3 out = second;
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) out[k] += gamma[k][a][c] * u[a] * v[c];
    return out;
  };
  double l = gdot(g, nabla(j.Xss, j.Xs, j.Xs), N);
  double m = gdot(g, nabla(j.Xst, j.Xs, j.Xt), N);
  double n = gdot(g, nabla(j.Xtt, j.Xt, j.Xt), N);

  OracleCurvature out;
  out.det_I = det;
  out.H = (E * n - 2 * F * m + G * l) / (2 * det);
  out.K_paper = (l * n - m * m) / det;
  return out;
}

double intrinsic_gauss_fd(const SurfaceChart& chart, double s, double t, const sym::Bindings& b,
                          const FDConfig& cfg) {
  check_config(cfg);
  // Outer differences act on E, F, G, which already carry first-difference
  // noise, so they use a wider step.
  double hh = 50 * cfg.h;
  bool r = cfg.extrapolation;
  auto ff = [&](double ds, double dt) { return first_form(chart, s + ds, t + dt, b, cfg); };
  auto comp = [](const FirstForm& f, int c) { return c == 0 ? f.E : c == 1 ? f.F : f.G; };
  auto ds = [&](int c) { return diff1([&](double d) { return comp(ff(d, 0), c); }, hh, r); };
  auto dt = [&](int c) { return diff1([&](double d) { return comp(ff(0, d), c); }, hh, r); };

  FirstForm f0 = ff(0, 0);
  double E = f0.E, F = f0.F, G = f0.G;
  double det = E * G - F * F;
  if (!(det > 1e-12)) throw SingularityError("degenerate first fundamental form");
  double Es = ds(0), Et = dt(0), Fs = ds(1), Ft = dt(1), Gs = ds(2), Gt = dt(2);
  double Ett = diff2([&](double d) { return ff(0, d).E; }, hh, r);
  double Gss = diff2([&](double d) { return ff(d, 0).G; }, hh, r);
  double Fst = diff_mixed([&](double d, double e) { return ff(d, e).F; }, hh, r);

  auto det3 = [](const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  Mat3 m1{{{-Ett / 2 + Fst - Gss / 2, Es / 2, Fs - Et / 2}, {Ft - Gs / 2, E, F}, {Gt / 2, F, G}}};
  Mat3 m2{{{0, Et / 2, Gs / 2}, {Et / 2, E, F}, {Gs / 2, F, G}}};
  return (det3(m1) - det3(m2)) / (det * det);
}

const std::vector<OdeCase>& ode_catalogue() {
  using sym::parse;
  static const std::vector<OdeCase> cat = {
      {"geodesic_min", "a", parse("a''"), parse("3*s/2 - 1/3"), {-1, 1},
       "minimal, foliated by geodesics: a'' = 0 with a = lambda s + mu (lambda = 3/2, mu = -1/3)"},
      {"equidistant_min_a", "a", parse("-2*a'^2 + a*a''"), parse("2/(s + 1)"), {-0.5, 2},
       "minimal, foliated by equidistant lines: -2a'^2 + a a'' = 0 with a = a0/(s + a1) (a0 = 2, a1 = 1)"},
      {"equidistant_min_b", "b", parse("-2*b'^2 + b*b''"), parse("3/(s + 2)"), {-1.5, 2},
       "minimal, foliated by equidistant lines: -2b'^2 + b b'' = 0 with b = b0/(s + b1) (b0 = 3, b1 = 2)"},
      {"horocycle_min", "a", parse("a'' - a'^2"), parse("2 + log(abs(s + 3))"), {-2.5, 2},
       "minimal, foliated by horocycles: a'' - a'^2 = 0 with a = lambda + log|s + mu| (lambda = 2, mu = 3)"},
      {"geodesic_flat", "a", parse("a'^2"), parse("5/4"), {-1, 1},
       "flat, foliated by geodesics: a'^2 = 0 with a constant (a = 5/4)"},
      {"equidistant_flat", "b", parse("b^4 + 3*b'^2 - b*b''"), parse("1/sqrt(-s^2 + 1)"), {-0.9, 0.9},
       "flat, foliated by equidistant lines: b^4 + 3b'^2 - b b'' = 0 with b = 1/sqrt(-s^2 + lambda s + mu) "
       "(lambda = 0, mu = 1)"},
      {"horocycle_flat", "a", parse("a'' - 2*a'^2 - exp(2*a)"), parse("-log(abs(-s^2 + 1))/2"), {-0.9, 0.9},
       "flat, foliated by horocycles: a'' - 2a'^2 - e^{2a} = 0 with a = -log|-s^2 + lambda s + mu|/2 "
       "(lambda = 0, mu = 1)"},
  };
  return cat;
}

const OdeCase& ode_case(const std::string& id) {
  for (const auto& c : ode_catalogue())
    if (c.id == id) return c;
  throw SpecError("unknown ODE case: " + id);
}

std::vector<double> ode_samples(const OdeCase& c, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(c.domain.lo + c.domain.width() * (i + 0.5) / n);
  return out;
}

OdeResult ode_residual(const OdeCase& c, const std::vector<double>& samples) {
  std::vector<std::pair<double, double>> points;
  for (double s : samples) {
    if (!c.domain.contains(s)) throw DomainError("sample s = " + std::to_string(s) + " is outside " + c.id + "'s domain");
    points.emplace_back(s, 0.0);
  }
  OdeResult out;
  // abs forms are resolved by their sign on the sampled interval
  sym::SymExpr resolved = sym::resolve_abs(c.solution, points);
  out.symbolic = sym::substitute(c.residual, c.function, resolved);
  sym::Bindings b = sym::Bindings::from_exprs({{c.function, c.solution}});
  for (double s : samples) out.max_abs = std::max(out.max_abs, std::fabs(sym::eval(c.residual, s, 0.0, b)));
  return out;
}

}  // namespace solv
