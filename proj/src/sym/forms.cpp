#include "solv/sym/forms.hpp"

#include <algorithm>

#include "solv/errors.hpp"
#include "solv/sym/eval.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv::sym {

CoefficientContent content_of(const SymExpr& coefficient) {
  RatFunc r = RatFunc::from(coefficient);
  if (r.is_zero()) return {Rational(0), SymExpr(1), SymExpr()};
  ContentSplit cs = split_content(r.num());
  SymExpr mono = RatFunc(Poly::term(1, cs.monomial)).to_expr();
  SymExpr rest = RatFunc(cs.primitive, r.den()).reduced().to_expr();
  return {cs.content, mono, rest};
}

namespace {

struct Cleared {
  Poly num;
  RatFunc::Factors kept;  // t-free part of the denominator
  int power = 0;
  SymExpr denominator{1};
};

Cleared clear_t_denominator(const RatFunc& r) {
  Cleared out;
  out.num = r.num();
  std::vector<std::pair<Poly, int>> cleared;
  for (const auto& [f, e] : r.den()) {
    if (f.depends_on_t()) {
      cleared.emplace_back(f, e);
    } else {
      out.kept.emplace(f, e);
    }
  }
  if (cleared.size() == 1) {
    out.power = cleared[0].second;
    out.denominator = poly_to_expr(cleared[0].first);
  } else if (!cleared.empty()) {
    std::vector<SymExpr> parts;
    for (const auto& [f, e] : cleared) parts.push_back(e == 1 ? poly_to_expr(f) : SymExpr::pow(poly_to_expr(f), Rational(e)));
    out.power = 1;
    out.denominator = SymExpr::mul(std::move(parts));
  }
  return out;
}

[[noreturn]] void reject(Atom a, const char* what) {
  throw FormError("not a " + std::string(what) + ": offending node " + print(atom_to_expr(a, 1)));
}

SymExpr coefficient_expr(Poly p, const RatFunc::Factors& kept) { return RatFunc(std::move(p), kept).reduced().to_expr(); }

}  // namespace

FourierExpansion to_fourier(const SymExpr& e) {
  RatFunc r = RatFunc::from(e);
  Cleared c = clear_t_denominator(r);
  for (const auto& [f, k] : r.den())
    for (const auto& [key, v] : f.terms())
      for (const auto& [a, x] : key.mono)
        if (a->has_t) reject(a, "trig polynomial denominator");
  std::map<std::pair<int, int>, Poly> groups;  // (n, kind)
  for (const auto& [key, v] : c.num.terms()) {
    for (const auto& [a, x] : key.mono)
      if (a->has_t) reject(a, "trig polynomial in t");
    groups[{key.trig.n, key.trig.kind}].add_term(TermKey{key.mono, Trig::one()}, v);
  }
  FourierExpansion out;
  out.denominator_power = c.power;
  out.denominator = c.denominator;
  int k = 0;
  for (const auto& [nk, p] : groups)
    if (!p.is_zero()) k = std::max(k, nk.first);
  out.form.k = k;
  out.form.A.assign(static_cast<std::size_t>(k + 1), SymExpr());
  out.form.B.assign(static_cast<std::size_t>(k + 1), SymExpr());
  for (auto& [nk, p] : groups) {
    auto n = static_cast<std::size_t>(nk.first);
    SymExpr coef = coefficient_expr(std::move(p), c.kept);
    if (nk.second == Trig::Sin) {
      out.form.B[n] = coef;
    } else {
      out.form.A[n] = coef;
    }
  }
  return out;
}

SymExpr fourier_sum(const FourierForm& f) {
  SymExpr acc = f.a(0);
  for (int n = 1; n <= f.k; ++n) {
    SymExpr arg = n == 1 ? t_var : SymExpr(n) * t_var;
    acc = acc + f.a(n) * cos(arg) + f.b(n) * sin(arg);
  }
  return acc;
}

FourierExpansion specialize(const FourierExpansion& f, const std::string& name, const SymExpr& replacement) {
  FourierExpansion out = f;
  for (auto& c : out.form.A) c = substitute(c, name, replacement);
  for (auto& c : out.form.B) c = substitute(c, name, replacement);
  out.denominator = substitute(f.denominator, name, replacement);
  int k = out.form.k;
  while (k > 0 && out.form.a(k).is_zero() && out.form.b(k).is_zero()) --k;
  out.form.k = k;
  out.form.A.resize(static_cast<std::size_t>(k + 1));
  out.form.B.resize(static_cast<std::size_t>(k + 1));
  return out;
}

SymExpr QuasiPolyForm::coefficient(int power, int weight) const {
  for (const auto& t : terms)
    if (t.power == power && t.weight == weight) return t.coefficient;
  return SymExpr();
}

int QuasiPolyForm::degree() const {
  int d = -1;
  for (const auto& t : terms) d = std::max(d, t.power);
  return d;
}

QuasiPolyExpansion to_quasipoly(const SymExpr& e) {
  RatFunc r = RatFunc::from(e);
  Cleared c = clear_t_denominator(r);
  std::map<std::pair<int, int>, Poly> groups;
  for (const auto& [key, v] : c.num.terms()) {
    if (!key.trig.is_one()) throw FormError("not a quasi-polynomial in t: offending node " + print(poly_to_expr(Poly::trig(key.trig))));
    int power = 0, weight = 0;
    Monomial rest;
    for (const auto& [a, x] : key.mono) {
      if (a == atom_t()) {
        if (x < 0) reject(a, "quasi-polynomial (negative power of t)");
        power = x;
      } else if (a->kind == AtomKind::Exp && a->arg == t_var) {
        weight = x;
      } else if (a->has_t) {
        reject(a, "quasi-polynomial in t");
      } else {
        rest.emplace_back(a, x);
      }
    }
    groups[{power, weight}].add_term(TermKey{rest, Trig::one()}, v);
  }
  QuasiPolyExpansion out;
  out.denominator_power = c.power;
  out.denominator = c.denominator;
  for (auto& [pw, p] : groups)
    if (!p.is_zero()) out.form.terms.push_back({pw.first, pw.second, coefficient_expr(std::move(p), c.kept)});
  return out;
}

SymExpr quasipoly_sum(const QuasiPolyForm& q) {
  SymExpr acc;
  for (const auto& t : q.terms) {
    SymExpr basis = pow(t_var, Rational(t.power)) * (t.weight ? exp(SymExpr(t.weight) * t_var) : SymExpr(1));
    acc = acc + t.coefficient * basis;
  }
  return acc;
}

QuasiPolyExpansion specialize(const QuasiPolyExpansion& q, const std::string& name, const SymExpr& replacement) {
  QuasiPolyExpansion out;
  out.denominator_power = q.denominator_power;
  out.denominator = substitute(q.denominator, name, replacement);
  for (const auto& t : q.form.terms) {
    SymExpr c = substitute(t.coefficient, name, replacement);
    if (!c.is_zero()) out.form.terms.push_back({t.power, t.weight, c});
  }
  return out;
}

std::optional<Rational> constant_ratio(const SymExpr& a, const SymExpr& b) {
  RatFunc rb = RatFunc::from(b);
  if (rb.is_zero()) return std::nullopt;
  RatFunc q = (RatFunc::from(a) / rb).reduced();
  return q.constant_value();
}

std::optional<SymExpr> monomial_ratio(const SymExpr& a, const SymExpr& b) {
  RatFunc rb = RatFunc::from(b);
  if (rb.is_zero()) return std::nullopt;
  RatFunc q = (RatFunc::from(a) / rb).reduced();
  if (!q.den().empty() || !q.num().is_single_term()) return std::nullopt;
  if (!q.num().terms().begin()->first.trig.is_one()) return std::nullopt;
  return q.to_expr();
}

std::optional<SymExpr> cofactor(const SymExpr& e, const SymExpr& factor) {
  RatFunc rf = RatFunc::from(factor);
  if (rf.is_zero()) return std::nullopt;
  RatFunc q = (RatFunc::from(e) / rf).reduced();
  if (!q.den().empty()) return std::nullopt;
  for (const auto& [key, v] : rf.num().terms())
    for (const auto& [a, x] : key.mono)
      for (const auto& [qk, qv] : q.num().terms())
        if (mono_degree(qk.mono, a) < 0) return std::nullopt;
  return q.to_expr();
}

}  // namespace solv::sym
