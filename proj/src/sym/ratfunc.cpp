#include <unordered_map>

#include "solv/errors.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv::sym {

RatFunc::RatFunc(Poly num, Factors den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) it = it->second == 0 ? den_.erase(it) : std::next(it);
}

std::optional<Rational> RatFunc::constant_value() const {
  if (!den_.empty()) return std::nullopt;
  return num_.constant_value();
}

bool RatFunc::depends_on_t() const {
  if (num_.depends_on_t()) return true;
  for (const auto& [f, e] : den_)
    if (f.depends_on_t()) return true;
  return false;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  RatFunc::Factors all = a.den_;
  for (const auto& [f, e] : b.den_) {
    auto& slot = all[f];
    slot = std::max(slot, e);
  }
  Poly na = a.num_, nb = b.num_;
  for (const auto& [f, e] : all) {
    auto ia = a.den_.find(f);
    auto ib = b.den_.find(f);
    int ea = ia == a.den_.end() ? 0 : ia->second;
    int eb = ib == b.den_.end() ? 0 : ib->second;
    if (e > ea) na = na * f.pow(static_cast<unsigned>(e - ea));
    if (e > eb) nb = nb * f.pow(static_cast<unsigned>(e - eb));
  }
  return RatFunc(na + nb, std::move(all));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  RatFunc::Factors den = a.den_;
  for (const auto& [f, e] : b.den_) den[f] += e;
  return RatFunc(a.num_ * b.num_, std::move(den));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw SingularityError("division by an expression that normalizes to 0");
  Poly top(1);
  for (const auto& [f, e] : den_) top = top * f.pow(static_cast<unsigned>(e));
  if (num_.is_single_term() && num_.terms().begin()->first.trig.is_one()) {
    const auto& [k, c] = *num_.terms().begin();
    return RatFunc(top.times_monomial(mono_pow(k.mono, -1), Rational(1 / c)));
  }
  ContentSplit cs = split_content(num_);
  Factors den;
  den.emplace(std::move(cs.primitive), 1);
  return RatFunc(top.times_monomial(mono_pow(cs.monomial, -1), Rational(1 / cs.content)), std::move(den));
}

RatFunc RatFunc::pow(long k) const {
  if (k == 0) return RatFunc(1);
  if (k < 0) return inverse().pow(-k);
  Factors den = den_;
  for (auto& [f, e] : den) e *= static_cast<int>(k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), std::move(den));
}

// ------------------------------------------------------------ derivative

namespace {

// Normal form of an atom's argument, cached per thread.
const RatFunc& arg_form(Atom a) {
  thread_local std::unordered_map<Atom, RatFunc> cache;
  auto it = cache.find(a);
  if (it == cache.end()) it = cache.emplace(a, RatFunc::from(a->arg)).first;
  return it->second;
}

RatFunc atom_derivative(Atom a, Var v);

RatFunc poly_derivative(const Poly& p, Var v) {
  std::map<RatFunc::Factors, Poly> parts;  // grouped by denominator
  Poly& plain = parts[{}];
  for (const auto& [k, c] : p.terms()) {
    if (v == Var::T && !k.trig.is_one()) {
      int n = k.trig.n;
      Trig d = k.trig.kind == Trig::Cos ? Trig::sin(n) : Trig::cos(n);
      Rational w = k.trig.kind == Trig::Cos ? Rational(-n) : Rational(n);
      plain.add_term(TermKey{k.mono, d}, c * w);
    }
    for (std::size_t i = 0; i < k.mono.size(); ++i) {
      auto [a, e] = k.mono[i];
      if (!(v == Var::S ? a->has_s : a->has_t)) continue;
      RatFunc da = atom_derivative(a, v);
      if (da.is_zero()) continue;
      Monomial rest = k.mono;
      if (e == 1) {
        rest.erase(rest.begin() + static_cast<long>(i));
      } else {
        rest[i].second = e - 1;
      }
      Poly base = Poly::term(c * e, rest, k.trig);
      parts[da.den()] += base * da.num();
    }
  }
  RatFunc out;
  for (auto& [den, num] : parts) out = out + RatFunc(std::move(num), den);
  return out;
}

RatFunc atom_derivative(Atom a, Var v) {
  thread_local std::unordered_map<Atom, RatFunc> cache_s, cache_t;
  auto& cache = v == Var::S ? cache_s : cache_t;
  if (auto it = cache.find(a); it != cache.end()) return it->second;
  RatFunc d;
  switch (a->kind) {
    case AtomKind::S:
      d = RatFunc(v == Var::S ? 1 : 0);
      break;
    case AtomKind::T:
      d = RatFunc(v == Var::T ? 1 : 0);
      break;
    case AtomKind::Param:
      break;
    case AtomKind::Func:
      if (v == Var::S) d = RatFunc(Poly::atom(atom_func(a->name, a->order + 1)));
      break;
    default: {
      const RatFunc& u = arg_form(a);
      RatFunc du = u.derivative(v);
      RatFunc self(Poly::atom(a));
      switch (a->kind) {
        case AtomKind::Exp:
          d = self * du;
          break;
        case AtomKind::Log:
          d = du / u;
          break;
        case AtomKind::Abs:
          d = self * du / u;
          break;
        case AtomKind::Root:
          d = RatFunc(Poly::atom(a, 1 - a->index)) * du * RatFunc(make_rational(1, a->index));
          break;
        case AtomKind::Sin:
          d = RatFunc(Poly::atom(atom_of(AtomKind::Cos, a->arg))) * du;
          break;
        case AtomKind::Cos:
          d = -(RatFunc(Poly::atom(atom_of(AtomKind::Sin, a->arg))) * du);
          break;
        default:
          break;
      }
      d.reduce();
    }
  }
  cache.emplace(a, d);
  return d;
}

}  // namespace

RatFunc RatFunc::derivative(Var v) const {
  RatFunc dn = poly_derivative(num_, v);
  if (den_.empty()) {
    dn.reduce();
    return dn;
  }
  RatFunc self(num_, den_);
  RatFunc out = dn * RatFunc(Poly(1), den_);
  for (const auto& [f, e] : den_) {
    RatFunc df = poly_derivative(f, v);
    if (df.is_zero()) continue;
    Factors inv_f;
    inv_f.emplace(f, 1);
    out = out - self * df * RatFunc(Poly(e), std::move(inv_f));
  }
  out.reduce();
  return out;
}

// --------------------------------------------------------------- reduce

void RatFunc::reduce() {
  for (;;) {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0) {
        auto q = exact_divide(num_, it->first);
        if (!q) break;
        num_ = std::move(*q);
        --it->second;
      }
      it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    if (!reduce_powers()) return;
  }
}

namespace {

// Splits a monomial into the part that stays and factors to expand:
// root(u, n)^e with |e| >= n and abs(u)^e with |e| >= 2.
bool split_powers(const Monomial& m, Monomial& keep, RatFunc& expanded) {
  bool hit = false;
  keep.clear();
  expanded = RatFunc(1);
  for (const auto& [a, e] : m) {
    int n = a->kind == AtomKind::Root ? a->index : a->kind == AtomKind::Abs ? 2 : 0;
    if (n == 0 || (e > -n && e < n)) {
      keep.emplace_back(a, e);
      continue;
    }
    int k = e / n;
    int rem = e % n;
    if (rem < 0) {
      rem += n;
      --k;
    }
    if (rem) keep.emplace_back(a, rem);
    expanded = expanded * arg_form(a).pow(k);
    hit = true;
  }
  return hit;
}

}  // namespace

bool RatFunc::reduce_powers() {
  bool changed = false;
  Poly plain;
  RatFunc extra;
  Monomial keep;
  RatFunc factor;
  for (const auto& [k, c] : num_.terms()) {
    if (split_powers(k.mono, keep, factor)) {
      extra = extra + RatFunc(Poly::term(c, keep, k.trig)) * factor;
      changed = true;
    } else {
      plain.add_term(k, c);
    }
  }
  Factors den;
  RatFunc den_fix(1);
  for (const auto& [f, e] : den_) {
    bool hit = false;
    RatFunc fixed;
    for (const auto& [k, c] : f.terms()) {
      if (split_powers(k.mono, keep, factor)) {
        hit = true;
        fixed = fixed + RatFunc(Poly::term(c, keep, k.trig)) * factor;
      } else {
        fixed = fixed + RatFunc(Poly::term(c, k.mono, k.trig));
      }
    }
    if (hit) {
      den_fix = den_fix * fixed.inverse().pow(e);
      changed = true;
    } else {
      den.emplace(f, e);
    }
  }
  if (!changed) return false;
  *this = (RatFunc(std::move(plain)) + extra) * RatFunc(Poly(1), std::move(den)) * den_fix;
  return true;
}

}  // namespace solv::sym
