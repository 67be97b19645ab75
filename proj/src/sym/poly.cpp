#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "solv/errors.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv::sym {

// ---------------------------------------------------------------- atoms

namespace {

std::mutex g_atom_mutex;

std::unordered_map<std::string, std::unique_ptr<AtomInfo>>& atom_table() {
  static std::unordered_map<std::string, std::unique_ptr<AtomInfo>> table;
  return table;
}

Atom intern(AtomInfo info) {
  std::lock_guard lock(g_atom_mutex);
  auto& table = atom_table();
  info.key.insert(info.key.begin(), static_cast<char>('A' + static_cast<int>(info.kind)));
  auto it = table.find(info.key);
  if (it != table.end()) return it->second.get();
  auto owned = std::make_unique<AtomInfo>(std::move(info));
  Atom a = owned.get();
  table.emplace(a->key, std::move(owned));
  return a;
}

}  // namespace

Atom atom_s() {
  static Atom a = intern({AtomKind::S, "", 0, 0, SymExpr(), "s", true, false});
  return a;
}

Atom atom_t() {
  static Atom a = intern({AtomKind::T, "", 0, 0, SymExpr(), "t", false, true});
  return a;
}

Atom atom_param(const std::string& name) {
  return intern({AtomKind::Param, name, 0, 0, SymExpr(), name, false, false});
}

Atom atom_func(const std::string& name, int order) {
  char buf[16];
  std::snprintf(buf, sizeof buf, ":%03d", order);
  return intern({AtomKind::Func, name, order, 0, SymExpr(), name + buf, true, false});
}

Atom atom_of(AtomKind kind, const SymExpr& arg, int index) {
  std::string key = print(arg);
  if (kind == AtomKind::Root) key = std::to_string(index) + "|" + key;
  return intern({kind, "", 0, index, arg, key, arg.depends_on(Var::S), arg.depends_on(Var::T)});
}

bool atom_less(Atom a, Atom b) {
  if (a == b) return false;
  if (a->kind != b->kind) return a->kind < b->kind;
  if (a->key.size() != b->key.size() && a->kind >= AtomKind::Exp) return a->key.size() < b->key.size();
  return a->key < b->key;
}

// ------------------------------------------------------------ monomials

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && atom_less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || atom_less(b[j].first, a[i].first)) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial mono_pow(const Monomial& a, int k) {
  if (k == 0) return {};
  Monomial out = a;
  for (auto& [atom, e] : out) e *= k;
  return out;
}

int mono_degree(const Monomial& m, Atom v) {
  for (const auto& [a, e] : m)
    if (a == v) return e;
  return 0;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return atom_less(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

bool trig_less(const Trig& a, const Trig& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.kind < b.kind;
}

bool TermKeyLess::operator()(const TermKey& a, const TermKey& b) const {
  if (mono_less(a.mono, b.mono)) return true;
  if (mono_less(b.mono, a.mono)) return false;
  return trig_less(a.trig, b.trig);
}

// ------------------------------------------------------------------ Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(TermKey{}, c);
}

Poly Poly::atom(Atom a, int e) { return term(1, Monomial{{a, e}}); }

Poly Poly::trig(Trig tr) { return term(1, {}, tr); }

Poly Poly::term(const Rational& c, Monomial m, Trig tr) {
  Poly p;
  if (c != 0) p.terms_.emplace(TermKey{std::move(m), tr}, c);
  return p;
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1) {
    const auto& [k, c] = *terms_.begin();
    if (k.mono.empty() && k.trig.is_one()) return c;
  }
  return std::nullopt;
}

bool Poly::has_trig() const {
  for (const auto& [k, c] : terms_)
    if (!k.trig.is_one()) return true;
  return false;
}

bool Poly::depends_on_t() const {
  for (const auto& [k, c] : terms_) {
    if (!k.trig.is_one()) return true;
    for (const auto& [a, e] : k.mono)
      if (a->has_t) return true;
  }
  return false;
}

bool Poly::depends_on_s() const {
  for (const auto& [k, c] : terms_)
    for (const auto& [a, e] : k.mono)
      if (a->has_s) return true;
  return false;
}

void Poly::add_term(const TermKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Rational& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, v * c);
  return out;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.add_term(TermKey{mono_mul(k.mono, m), k.trig}, v * c);
  return out;
}

namespace {

// Product-to-sum on the basis; appends up to two (trig, weight) pairs.
void trig_product(const Trig& a, const Trig& b, std::pair<Trig, Rational> out[2], int& count) {
  count = 0;
  if (a.is_one()) {
    out[count++] = {b, 1};
    return;
  }
  if (b.is_one()) {
    out[count++] = {a, 1};
    return;
  }
  const Rational half = make_rational(1, 2);
  int sum = a.n + b.n;
  int diff = a.n - b.n;
  auto cos_of = [&](int n, const Rational& w) {
    n = n < 0 ? -n : n;
    out[count++] = {n == 0 ? Trig::one() : Trig::cos(n), w};
  };
  auto sin_of = [&](int n, const Rational& w) {
    if (n == 0) return;
    if (n < 0) {
      out[count++] = {Trig::sin(-n), -w};
    } else {
      out[count++] = {Trig::sin(n), w};
    }
  };
  if (a.kind == Trig::Cos && b.kind == Trig::Cos) {
    cos_of(diff, half);
    cos_of(sum, half);
  } else if (a.kind == Trig::Sin && b.kind == Trig::Sin) {
    cos_of(diff, half);
    cos_of(sum, -half);
  } else if (a.kind == Trig::Sin) {  // sin a cos b
    sin_of(sum, half);
    sin_of(diff, half);
  } else {  // cos a sin b
    sin_of(sum, half);
    sin_of(-diff, half);
  }
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  std::pair<Trig, Rational> parts[2];
  int count = 0;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Monomial m = mono_mul(ka.mono, kb.mono);
      Rational c = ca * cb;
      trig_product(ka.trig, kb.trig, parts, count);
      for (int i = 0; i < count; ++i) out.add_term(TermKey{m, parts[i].first}, c * parts[i].second);
    }
  }
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  TermKeyLess less;
  for (; i != a.terms_.end(); ++i, ++j) {
    if (less(i->first, j->first) || less(j->first, i->first)) return false;
    if (i->second != j->second) return false;
  }
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  TermKeyLess less;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
    if (less(i->first, j->first)) return true;
    if (less(j->first, i->first)) return false;
    if (i->second != j->second) return i->second < j->second;
  }
  return i == a.terms_.end() && j != b.terms_.end();
}

// --------------------------------------------------------------- content

ContentSplit split_content(const Poly& p) {
  ContentSplit out{Rational(0), {}, Poly()};
  if (p.is_zero()) return out;
  mpz_class g = 0, l = 1;
  std::map<Atom, int, decltype(&atom_less)> low(&atom_less);
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    if (first) {
      for (const auto& [a, e] : k.mono) low[a] = e;
      first = false;
    } else {
      // atoms missing from this term count with exponent 0
      for (auto& [a, e] : low) e = std::min(e, mono_degree(k.mono, a));
      for (const auto& [a, e] : k.mono)
        if (!low.count(a)) low[a] = std::min(0, e);
    }
  }
  Rational content(g, l);
  content.canonicalize();
  for (const auto& [a, e] : low)
    if (e) out.monomial.emplace_back(a, e);
  out.primitive = p.times_monomial(mono_pow(out.monomial, -1), Rational(1 / content));
  if (out.primitive.terms().begin()->second < 0) {
    content = -content;
    out.primitive = -out.primitive;
  }
  out.content = content;
  return out;
}

// --------------------------------------------------------- exact division

namespace {

using UPoly = std::map<int, Poly>;  // degree -> coefficient

void upoly_add(UPoly& p, int d, const Poly& c) {
  if (c.is_zero()) return;
  auto& slot = p[d];
  slot += c;
  if (slot.is_zero()) p.erase(d);
}

// Divides p by f in one main variable whose leading coefficient in f is the
// unit lc. Quotient degrees run from lowest(p) upwards; without `laurent`
// they must stay nonnegative.
std::optional<UPoly> udivide(UPoly p, const UPoly& f, const Poly& lc, bool laurent = true) {
  if (p.empty()) return UPoly{};
  int lowest = p.begin()->first - f.begin()->first;
  if (!laurent && lowest < 0) return std::nullopt;
  const auto& [lc_key, lc_c] = *lc.terms().begin();
  Monomial lc_inv = mono_pow(lc_key.mono, -1);
  Rational lc_cinv = 1 / lc_c;
  int df = f.rbegin()->first;
  UPoly q;
  while (!p.empty()) {
    int top = p.rbegin()->first;
    if (top - df < lowest) return std::nullopt;
    Poly coeff = p.rbegin()->second.times_monomial(lc_inv, lc_cinv);
    for (const auto& [k, fk] : f) upoly_add(p, top - df + k, -(coeff * fk));
    upoly_add(q, top - df, coeff);
  }
  return q;
}

UPoly split_by(const Poly& p, Atom v) {
  UPoly out;
  for (const auto& [k, c] : p.terms()) {
    int d = 0;
    Monomial rest;
    for (const auto& [a, e] : k.mono) {
      if (a == v) {
        d = e;
      } else {
        rest.emplace_back(a, e);
      }
    }
    out[d].add_term(TermKey{std::move(rest), k.trig}, c);
  }
  return out;
}

Poly join_by(const UPoly& p, Atom v) {
  Poly out;
  for (const auto& [d, c] : p) out += d ? c.times_monomial(Monomial{{v, d}}) : c;
  return out;
}

// Univariate rational polynomials in S = sin t.
using SPoly = std::vector<Rational>;

SPoly spoly_add(SPoly a, const SPoly& b, const Rational& w = 1) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += w * b[i];
  return a;
}

SPoly spoly_shift(const SPoly& a) {
  SPoly out(a.size() + 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

// cos(n t) and sin(n t) as A(S) + C B(S), with C = cos t and C^2 = 1 - S^2.
struct SCTable {
  std::vector<std::pair<SPoly, SPoly>> cos_n, sin_n;

  void grow(int n) {
    if (cos_n.empty()) {
      cos_n.push_back({{Rational(1)}, {}});
      sin_n.push_back({{}, {}});
    }
    while (static_cast<int>(cos_n.size()) <= n) {
      const auto& [ca, cb] = cos_n.back();
      const auto& [sa, sb] = sin_n.back();
      // (A + C B) C = (1 - S^2) B + C A ;  (A + C B) S = S A + C S B
      auto times_c = [](const SPoly& a, const SPoly& b) {
        SPoly na = spoly_add(b, spoly_shift(spoly_shift(b)), -1);
        return std::make_pair(na, a);
      };
      auto times_s = [](const SPoly& a, const SPoly& b) { return std::make_pair(spoly_shift(a), spoly_shift(b)); };
      auto cc = times_c(ca, cb), ss = times_s(sa, sb);
      auto sc = times_c(sa, sb), cs = times_s(ca, cb);
      std::pair<SPoly, SPoly> c_next{spoly_add(cc.first, ss.first, -1), spoly_add(cc.second, ss.second, -1)};
      std::pair<SPoly, SPoly> s_next{spoly_add(sc.first, cs.first), spoly_add(sc.second, cs.second)};
      cos_n.push_back(std::move(c_next));
      sin_n.push_back(std::move(s_next));
    }
  }
};

std::pair<SPoly, SPoly> sc_form(const Trig& tr) {
  static std::mutex mu;
  static SCTable table;
  std::lock_guard lock(mu);
  table.grow(tr.n);
  if (tr.kind == Trig::Sin) return table.sin_n[static_cast<std::size_t>(tr.n)];
  return table.cos_n[static_cast<std::size_t>(tr.n)];
}

// p = P0(S) + C P1(S), coefficients free of trig.
std::pair<UPoly, UPoly> to_sc(const Poly& p) {
  UPoly p0, p1;
  for (const auto& [k, c] : p.terms()) {
    const auto [a, b] = sc_form(k.trig);
    Poly base = Poly::term(c, k.mono);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) upoly_add(p0, static_cast<int>(i), base.scaled(a[i]));
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) upoly_add(p1, static_cast<int>(i), base.scaled(b[i]));
  }
  return {p0, p1};
}

Poly from_sc(const UPoly& p0, const UPoly& p1) {
  Poly out;
  Poly sin_pow(1);
  int deg = 0;
  int top = 0;
  if (!p0.empty()) top = std::max(top, p0.rbegin()->first);
  if (!p1.empty()) top = std::max(top, p1.rbegin()->first);
  Poly cos_t = Poly::trig(Trig::cos(1));
  for (; deg <= top; ++deg) {
    if (auto it = p0.find(deg); it != p0.end()) out += it->second * sin_pow;
    if (auto it = p1.find(deg); it != p1.end()) out += it->second * sin_pow * cos_t;
    sin_pow = sin_pow * Poly::trig(Trig::sin(1));
  }
  return out;
}

std::optional<Poly> divide_trig(const Poly& p, const Poly& f) {
  auto [f0, f1] = to_sc(f);
  if (!f1.empty() || f0.empty()) return std::nullopt;
  const Poly& lc = f0.rbegin()->second;
  if (!lc.is_single_term()) return std::nullopt;
  auto [p0, p1] = to_sc(p);
  if (!p0.empty() && p0.begin()->first < 0) return std::nullopt;
  auto q0 = udivide(p0, f0, lc, false);
  if (!q0) return std::nullopt;
  auto q1 = udivide(p1, f0, lc, false);
  if (!q1) return std::nullopt;
  return from_sc(*q0, *q1);
}

std::optional<Poly> divide_atoms(const Poly& p, const Poly& f) {
  // candidate main variables: atoms of f whose leading coefficient is a unit
  std::vector<Atom> atoms;
  for (const auto& [k, c] : f.terms())
    for (const auto& [a, e] : k.mono)
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  std::sort(atoms.begin(), atoms.end(), atom_less);
  Atom best = nullptr;
  int best_deg = 0;
  for (Atom v : atoms) {
    UPoly fv = split_by(f, v);
    if (fv.begin()->first < 0) continue;
    const Poly& lc = fv.rbegin()->second;
    int deg = fv.rbegin()->first;
    if (deg <= 0 || !lc.is_single_term()) continue;
    if (!best || deg < best_deg) {
      best = v;
      best_deg = deg;
    }
  }
  if (!best) return std::nullopt;
  UPoly fv = split_by(f, best);
  auto q = udivide(split_by(p, best), fv, fv.rbegin()->second);
  if (!q) return std::nullopt;
  return join_by(*q, best);
}

}  // namespace

std::optional<Poly> exact_divide(const Poly& p, const Poly& f) {
  if (f.is_zero()) throw SingularityError("exact division by zero polynomial");
  if (p.is_zero()) return Poly();
  if (f.is_single_term()) {
    const auto& [k, c] = *f.terms().begin();
    if (k.trig.is_one()) return p.times_monomial(mono_pow(k.mono, -1), Rational(1 / c));
  }
  if (f.has_trig()) return divide_trig(p, f);
  return divide_atoms(p, f);
}

}  // namespace solv::sym
