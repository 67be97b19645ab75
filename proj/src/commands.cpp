#include "solv/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "solv/errors.hpp"
#include "solv/oracle.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv {

using nlohmann::json;
using sym::SymExpr;

namespace {

std::string param_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return v.dump();
  throw SpecError("parameter values must be strings or numbers");
}

Interval interval_from(const json& v, const char* name) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw SpecError(std::string(name) + " must be a [lo, hi] pair of numbers");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json content_json(const SymExpr& e) {
  sym::CoefficientContent c = sym::content_of(e);
  return {{"expr", e.str()},
          {"content", {{"constant", to_string(c.constant)}, {"monomial", c.monomial.str()}, {"cofactor", c.cofactor.str()}}}};
}

void bind_fourier(sym::FourierExpansion& f, const ParamMap& params) {
  if (params.empty()) return;
  for (auto& e : f.form.A) e = sym::bind_params(e, params);
  for (auto& e : f.form.B) e = sym::bind_params(e, params);
  f.denominator = sym::bind_params(f.denominator, params);
  while (f.form.k > 0 && f.form.a(f.form.k).is_zero() && f.form.b(f.form.k).is_zero()) {
    --f.form.k;
    f.form.A.pop_back();
    f.form.B.pop_back();
  }
}

void bind_quasi(sym::QuasiPolyExpansion& q, const ParamMap& params) {
  if (params.empty()) return;
  std::vector<sym::QuasiTerm> kept;
  for (auto t : q.form.terms) {
    t.coefficient = sym::bind_params(t.coefficient, params);
    if (!t.coefficient.is_zero()) kept.push_back(std::move(t));
  }
  q.form.terms = std::move(kept);
  q.denominator = sym::bind_params(q.denominator, params);
}

bool is_trig_only(const SymExpr& e) {
  try {
    sym::to_fourier(e);
    return true;
  } catch (const FormError&) {
    return false;
  }
}

}  // namespace

FamilySpec family_spec_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("family spec must be a JSON object");
  FamilySpec spec;
  if (!j.contains("family") || !j["family"].is_string()) throw SpecError("family spec needs a \"family\" string");
  spec.family = j["family"].get<std::string>();
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    if (key == "params") {
      if (!value.is_object()) throw SpecError("\"params\" must be an object");
      for (const auto& [name, v] : value.items()) spec.params[name] = param_text(v);
    } else if (key == "s_domain") {
      spec.s_domain = interval_from(value, "s_domain");
    } else if (key == "t_domain") {
      spec.t_domain = interval_from(value, "t_domain");
    } else {
      throw SpecError("unknown family spec field: " + key);
    }
  }
  return spec;
}

FamilySpec parse_family_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("family spec is not valid JSON: ") + e.what());
  }
  return family_spec_from_json(j);
}

Target parse_target(const std::string& name) {
  if (name == "H") return Target::H;
  if (name == "K") return Target::K;
  throw SpecError("target must be H or K");
}

NormalChoice parse_normal(const std::string& name) {
  if (name == "preset") return NormalChoice::Preset;
  if (name == "cross") return NormalChoice::Cross;
  throw SpecError("normal must be preset or cross");
}

CurvatureMethod parse_method(const std::string& name) {
  if (name == "symbolic") return CurvatureMethod::Symbolic;
  if (name == "numeric") return CurvatureMethod::Numeric;
  if (name == "oracle") return CurvatureMethod::Oracle;
  throw SpecError("method must be symbolic, numeric or oracle");
}

Expansion expand(const FamilyBuild& fb, Target target, NormalChoice normal) {
  Expansion out;
  out.target = target;
  const SurfaceChart chart = fb.generic_family ? fb.generic : resolve_chart_abs(fb.chart);
  FundamentalData fd = fundamental_data(chart, normal);
  SymExpr numerator = target == Target::H ? h_numerator(fd) : k_numerator(fd);
  bool fourier = fb.generic_family ? fb.trig_family : is_trig_only(numerator);
  if (fourier) {
    sym::FourierExpansion f = sym::to_fourier(numerator);
    if (fb.generic_family)
      for (const auto& [name, e] : fb.functions) f = sym::specialize(f, name, e);
    bind_fourier(f, fb.params);
    out.fourier = std::move(f);
  } else {
    sym::QuasiPolyExpansion q = sym::to_quasipoly(numerator);
    if (fb.generic_family)
      for (const auto& [name, e] : fb.functions) q = sym::specialize(q, name, e);
    bind_quasi(q, fb.params);
    out.quasi = std::move(q);
  }
  return out;
}

CurvaturePoint curvature_at(const FamilyBuild& fb, double s, double t, CurvatureMethod method, NormalChoice normal) {
  if (auto free = fb.unbound(); !free.empty()) {
    std::string names;
    for (const auto& n : free) names += (names.empty() ? "" : ", ") + n;
    throw SpecError("unbound function symbol(s) " + names + "; bind them under \"params\"");
  }
  const Interval& S = fb.chart.s_domain;
  const Interval& T = fb.chart.t_domain;
  if (s < S.lo || s > S.hi || t < T.lo || t > T.hi)
    throw DomainError("point (" + num(s) + ", " + num(t) + ") is outside the chart domain");
  CurvaturePoint p;
  p.s = s;
  p.t = t;
  switch (method) {
    case CurvatureMethod::Symbolic: {
      FundamentalData fd = fundamental_data(fb.chart, normal);
      SymExpr det = sym::normalize(fd.E * fd.G - fd.F * fd.F);
      double det_v = sym::eval(det, s, t);
      if (!(det_v > kDegenerateMetric)) throw SingularityError("degenerate first fundamental form");
      SymExpr nn = dot(fd.normal, fd.normal);
      SymExpr H = sym::normalize(h_numerator(fd) / (2 * det * sym::pow(nn, Rational(1, 2))));
      SymExpr K = sym::normalize(k_numerator(fd) / (det * nn));
      p.H = sym::eval(H, s, t);
      p.K_paper = sym::eval(K, s, t);
      break;
    }
    case CurvatureMethod::Numeric: {
      CurvatureValues v = CurvatureEvaluator(fb.chart, normal).at(s, t);
      p.H = v.H;
      p.K_paper = v.K;
      break;
    }
    case CurvatureMethod::Oracle: {
      OracleCurvature o = curvatures_fd(fb.chart, s, t);
      p.H = o.H;
      p.K_paper = o.K_paper;
      p.K_intrinsic = intrinsic_gauss_fd(fb.chart, s, t);
      break;
    }
  }
  if (!std::isfinite(p.H) || !std::isfinite(p.K_paper)) throw SingularityError("curvature is not finite at this point");
  return p;
}

std::string mesh_obj(const FamilyBuild& fb, int nu, int nv, bool curve) {
  if (!fb.unbound().empty()) throw SpecError("mesh needs every function symbol bound");
  if (nv < 2 || (!curve && nu < 2)) throw SpecError("grid must be at least 2x2 (1xN with --curve)");
  const Interval& S = fb.chart.s_domain;
  const Interval& T = fb.chart.t_domain;
  std::vector<double> ss;
  if (curve) {
    ss.push_back((S.lo + S.hi) / 2);
  } else {
    for (int i = 0; i < nu; ++i) ss.push_back(S.lo + S.width() * i / (nu - 1));
  }
  std::ostringstream out;
  for (double s : ss)
    for (int j = 0; j < nv; ++j) {
      double t = T.lo + T.width() * j / (nv - 1);
      Sol3Point p = chart_point(fb.chart, s, t);
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw SingularityError("chart is not finite at (" + num(s) + ", " + num(t) + ")");
      out << "v " << num(p.x) << ' ' << num(p.y) << ' ' << num(p.z) << '\n';
    }
  if (curve) {
    out << 'l';
    for (int j = 1; j <= nv; ++j) out << ' ' << j;
    out << '\n';
    return out.str();
  }
  for (int i = 0; i + 1 < nu; ++i)
    for (int j = 0; j + 1 < nv; ++j) {
      int v00 = i * nv + j + 1, v01 = v00 + 1, v10 = v00 + nv, v11 = v10 + 1;
      out << "f " << v00 << ' ' << v10 << ' ' << v11 << '\n';
      out << "f " << v00 << ' ' << v11 << ' ' << v01 << '\n';
    }
  return out.str();
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"kind", c.kind}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
  json notes = json::array();
  for (const auto& n : r.notes)
    notes.push_back({{"name", n.name}, {"expected", n.expected}, {"got", n.got}, {"match", n.match}});
  return {{"theorem", r.theorem}, {"pass", r.pass}, {"wall_time_ms", r.wall_ms}, {"checks", checks},
          {"informational", notes}};
}

json to_json(const Expansion& e, const std::string& family) {
  json j{{"family", family}, {"target", e.target == Target::H ? "H" : "K"}};
  if (e.fourier) {
    const auto& f = *e.fourier;
    j["form"] = "fourier";
    j["k"] = f.form.k;
    j["denominator"] = f.denominator.str();
    j["denominator_power"] = f.denominator_power;
    json coeffs = json::object();
    for (int n = 0; n <= f.form.k; ++n) {
      coeffs["A" + std::to_string(n)] = content_json(f.form.a(n));
      if (n > 0) coeffs["B" + std::to_string(n)] = content_json(f.form.b(n));
    }
    j["coefficients"] = coeffs;
  } else {
    const auto& q = *e.quasi;
    j["form"] = "quasipoly";
    j["degree"] = q.form.degree();
    j["denominator"] = q.denominator.str();
    j["denominator_power"] = q.denominator_power;
    json terms = json::array();
    for (const auto& t : q.form.terms) {
      json term = content_json(t.coefficient);
      term["power"] = t.power;
      term["weight"] = t.weight;
      terms.push_back(term);
    }
    j["terms"] = terms;
  }
  return j;
}

json to_json(const CurvaturePoint& p, CurvatureMethod method) {
  const char* m = method == CurvatureMethod::Symbolic ? "symbolic" : method == CurvatureMethod::Numeric ? "numeric" : "oracle";
  json j{{"s", p.s}, {"t", p.t}, {"method", m}, {"H", p.H}, {"K_paper", p.K_paper}};
  if (p.K_intrinsic) j["K_intrinsic"] = *p.K_intrinsic;
  return j;
}

std::string pretty(const VerificationReport& r) {
  std::ostringstream os;
  os << r.theorem << ": " << (r.pass ? "PASS" : "FAIL") << " (" << num(r.wall_ms) << " ms)\n";
  for (const auto& c : r.checks)
    os << (c.pass ? "  ok    " : "  FAIL  ") << c.name << " [" << c.kind << "]: expected " << c.expected << ", got "
       << c.got << '\n';
  for (const auto& n : r.notes)
    os << (n.match ? "  info= " : "  info! ") << n.name << ": stated " << n.expected << ", got " << n.got << '\n';
  return os.str();
}

std::string pretty(const Expansion& e, const std::string& family) {
  std::ostringstream os;
  os << family << ' ' << (e.target == Target::H ? "H" : "K") << "-numerator\n";
  if (e.fourier) {
    const auto& f = *e.fourier;
    os << "  cleared by (" << f.denominator.str() << ")^" << f.denominator_power << ", k = " << f.form.k << '\n';
    for (int n = 0; n <= f.form.k; ++n) {
      os << "  A" << n << " = " << f.form.a(n).str() << '\n';
      if (n > 0) os << "  B" << n << " = " << f.form.b(n).str() << '\n';
    }
  } else {
    const auto& q = *e.quasi;
    os << "  cleared by (" << q.denominator.str() << ")^" << q.denominator_power << ", degree " << q.form.degree()
       << '\n';
    for (const auto& t : q.form.terms)
      os << "  t^" << t.power << (t.weight ? " exp(" + std::to_string(t.weight) + "t)" : "") << ": "
         << t.coefficient.str() << '\n';
  }
  return os.str();
}

std::string pretty(const CurvaturePoint& p, CurvatureMethod method) {
  std::ostringstream os;
  os << "(s, t) = (" << num(p.s) << ", " << num(p.t) << ")  method "
     << (method == CurvatureMethod::Symbolic ? "symbolic" : method == CurvatureMethod::Numeric ? "numeric" : "oracle")
     << "\n  H = " << num(p.H) << "\n  K_paper = " << num(p.K_paper) << '\n';
  if (p.K_intrinsic) os << "  K_intrinsic = " << num(*p.K_intrinsic) << '\n';
  return os.str();
}

}  // namespace solv
