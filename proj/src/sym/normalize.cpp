#include <unordered_map>

#include "solv/errors.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv::sym {

namespace {

SymExpr canonical(const RatFunc& r) { return r.reduced().to_expr(); }

RatFunc atom_rf(Atom a, int e = 1) { return RatFunc(Poly::atom(a, e)); }

// Sign used to pick one of u, -u: the first term of the numerator.
bool leading_negative(const RatFunc& u) { return !u.is_zero() && u.num().terms().begin()->second < 0; }

bool positive_atom(Atom a) {
  return a->kind == AtomKind::Exp || a->kind == AtomKind::Root || a->kind == AtomKind::Abs;
}

// Single term c * monomial (no trig, no denominator)?
const std::pair<const TermKey, Rational>* single_term(const RatFunc& u) {
  if (!u.den().empty() || !u.num().is_single_term()) return nullptr;
  const auto& term = *u.num().terms().begin();
  if (!term.first.trig.is_one()) return nullptr;
  return &term;
}

bool exact_root(const mpz_class& v, unsigned long n, mpz_class& out) {
  if (v < 0) return false;
  return mpz_root(out.get_mpz_t(), v.get_mpz_t(), n) != 0;
}

class Converter {
 public:
  RatFunc conv(const SymExpr& e) {
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    RatFunc r = compute(e);
    memo_.emplace(e.id(), r);
    return r;
  }

 private:
  RatFunc compute(const SymExpr& e) {
    switch (e.kind()) {
      case Kind::Const:
        return RatFunc(e.value());
      case Kind::Var:
        return atom_rf(e.variable() == Var::S ? atom_s() : atom_t());
      case Kind::Func:
        return atom_rf(atom_func(e.name(), e.order()));
      case Kind::Param:
        return atom_rf(atom_param(e.name()));
      case Kind::Add: {
        RatFunc acc;
        for (const auto& c : e.args()) acc = acc + conv(c);
        return acc;
      }
      case Kind::Mul: {
        RatFunc acc(1);
        for (const auto& c : e.args()) acc = acc * conv(c);
        return acc;
      }
      case Kind::Div:
        return conv(e.arg(0)) * inv(e.arg(1));
      case Kind::Pow: {
        const Rational& k = e.value();
        if (is_integer(k)) {
          long n = k.get_num().get_si();
          return n >= 0 ? conv(e.arg(0)).pow(n) : inv(e.arg(0)).pow(-n);
        }
        return root(e.arg(0), k);
      }
      case Kind::Sin:
        return trig(AtomKind::Sin, conv(e.arg(0)).reduced());
      case Kind::Cos:
        return trig(AtomKind::Cos, conv(e.arg(0)).reduced());
      case Kind::Exp:
        return exp_of(conv(e.arg(0)).reduced());
      case Kind::Log:
        return log_of(conv(e.arg(0)).reduced());
      case Kind::Abs:
        return abs_of(conv(e.arg(0)).reduced());
    }
    return RatFunc();
  }

  // 1/e, distributed over products so that printed denominators come back
  // as the same factors.
  RatFunc inv(const SymExpr& e) {
    switch (e.kind()) {
      case Kind::Const:
        if (e.value() == 0) throw SingularityError("division by 0");
        return RatFunc(Rational(1 / e.value()));
      case Kind::Mul: {
        RatFunc acc(1);
        for (const auto& c : e.args()) acc = acc * inv(c);
        return acc;
      }
      case Kind::Div:
        return conv(e.arg(1)) * inv(e.arg(0));
      case Kind::Pow: {
        const Rational& k = e.value();
        if (is_integer(k)) {
          long n = k.get_num().get_si();
          return n >= 0 ? inv(e.arg(0)).pow(n) : conv(e.arg(0)).pow(-n);
        }
        return root(e.arg(0), Rational(-k));
      }
      default:
        return conv(e).inverse();
    }
  }

  RatFunc root(const SymExpr& base, const Rational& p) {
    RatFunc u = conv(base).reduced();
    long num = p.get_num().get_si();
    int n = static_cast<int>(p.get_den().get_si());
    if (auto c = u.constant_value()) {
      if (*c == 0) {
        if (num < 0) throw SingularityError("0 raised to a negative power");
        return RatFunc();
      }
      mpz_class rn, rd;
      if (exact_root(c->get_num(), static_cast<unsigned long>(n), rn) &&
          exact_root(c->get_den(), static_cast<unsigned long>(n), rd)) {
        Rational r(rn, rd);
        r.canonicalize();
        return RatFunc(r).pow(num);
      }
    }
    if (const auto* term = single_term(u); term && term->second == 1) {
      bool all_exp = true;
      for (const auto& [a, e] : term->first.mono) all_exp = all_exp && a->kind == AtomKind::Exp;
      if (all_exp) {
        RatFunc acc(1);
        for (const auto& [a, e] : term->first.mono) acc = acc * exp_of(RatFunc::from(a->arg) * RatFunc(Rational(p * e)));
        return acc;
      }
    }
    Atom a = atom_of(AtomKind::Root, canonical(u), n);
    RatFunc r = atom_rf(a, static_cast<int>(num));
    return r;
  }

  RatFunc exp_of(const RatFunc& u) {
    if (u.is_zero()) return RatFunc(1);
    if (!u.den().empty()) {
      ContentSplit cs = split_content(u.num());
      Rational c = cs.content;
      RatFunc base = u * RatFunc(Rational(1 / c)) * RatFunc(Rational(mpz_class(1), c.get_den()));
      Atom a = atom_of(AtomKind::Exp, canonical(base));
      return atom_rf(a, static_cast<int>(c.get_num().get_si()));
    }
    RatFunc acc(1);
    for (const auto& [k, c] : u.num().terms()) {
      if (k.trig.is_one() && k.mono.size() == 1 && k.mono[0].second == 1 && k.mono[0].first->kind == AtomKind::Log) {
        // exp(c log v) = v^c
        SymExpr v = k.mono[0].first->arg;
        if (is_integer(c)) {
          acc = acc * conv(v).pow(c.get_num().get_si());
        } else {
          acc = acc * root(v, c);
        }
        continue;
      }
      Rational unit(mpz_class(1), c.get_den());
      Atom a = atom_of(AtomKind::Exp, canonical(RatFunc(Poly::term(unit, k.mono, k.trig))));
      acc = acc * atom_rf(a, static_cast<int>(c.get_num().get_si()));
    }
    return acc;
  }

  RatFunc log_of(const RatFunc& u) {
    if (auto c = u.constant_value()) {
      if (*c == 1) return RatFunc();
      return atom_rf(atom_of(AtomKind::Log, SymExpr(*c)));
    }
    if (const auto* term = single_term(u); term && term->second > 0) {
      bool positive = true;
      for (const auto& [a, e] : term->first.mono) positive = positive && positive_atom(a);
      if (positive) {
        RatFunc acc = log_of(RatFunc(term->second));
        for (const auto& [a, e] : term->first.mono) {
          switch (a->kind) {
            case AtomKind::Exp:
              acc = acc + RatFunc::from(a->arg) * RatFunc(Rational(e));
              break;
            case AtomKind::Root:
              acc = acc + log_of(RatFunc::from(a->arg)) * RatFunc(make_rational(e, a->index));
              break;
            default:
              acc = acc + atom_rf(atom_of(AtomKind::Log, atom_to_expr(a, 1))) * RatFunc(Rational(e));
          }
        }
        return acc;
      }
    }
    return atom_rf(atom_of(AtomKind::Log, canonical(u)));
  }

  RatFunc abs_of(const RatFunc& u) {
    if (auto c = u.constant_value()) return RatFunc(Rational(::abs(*c)));
    if (const auto* term = single_term(u)) {
      bool positive = true;
      for (const auto& [a, e] : term->first.mono) positive = positive && positive_atom(a);
      if (positive) return term->second < 0 ? -u : u;
    }
    RatFunc v = leading_negative(u) ? -u : u;
    return atom_rf(atom_of(AtomKind::Abs, canonical(v)));
  }

  RatFunc opaque_trig(AtomKind kind, const RatFunc& u) {
    if (u.is_zero()) return RatFunc(kind == AtomKind::Cos ? 1 : 0);
    bool flip = leading_negative(u);
    RatFunc v = flip ? -u : u;
    RatFunc r = atom_rf(atom_of(kind, canonical(v)));
    return flip && kind == AtomKind::Sin ? -r : r;
  }

  RatFunc trig(AtomKind kind, const RatFunc& u) {
    if (!u.den().empty()) return opaque_trig(kind, u);
    Rational n = 0;
    Poly rest;
    for (const auto& [k, c] : u.num().terms()) {
      if (k.trig.is_one() && k.mono.size() == 1 && k.mono[0].first == atom_t() && k.mono[0].second == 1) {
        n = c;
      } else {
        rest.add_term(k, c);
      }
    }
    if (n == 0 || !is_integer(n) || rest.depends_on_t()) return opaque_trig(kind, u);
    long m = n.get_num().get_si();
    int sign = m < 0 ? -1 : 1;
    int am = static_cast<int>(m < 0 ? -m : m);
    RatFunc c_nt(Poly::trig(Trig::cos(am)));
    RatFunc s_nt(Poly::term(sign, {}, Trig::sin(am)));
    if (rest.is_zero()) return kind == AtomKind::Cos ? c_nt : s_nt;
    RatFunc r(std::move(rest));
    RatFunc cr = opaque_trig(AtomKind::Cos, r);
    RatFunc sr = opaque_trig(AtomKind::Sin, r);
    if (kind == AtomKind::Sin) return s_nt * cr + c_nt * sr;
    return c_nt * cr - s_nt * sr;
  }

  std::unordered_map<const SymExpr::Node*, RatFunc> memo_;
};

SymExpr trig_expr(const Trig& tr) {
  SymExpr arg = tr.n == 1 ? t_var : SymExpr::mul({SymExpr(tr.n), t_var});
  return tr.kind == Trig::Cos ? SymExpr::cos(arg) : SymExpr::sin(arg);
}

SymExpr term_expr(const Rational& c, const Monomial& m, const Trig& tr) {
  std::vector<SymExpr> f;
  for (const auto& [a, e] : m) f.push_back(atom_to_expr(a, e));
  if (!tr.is_one()) f.push_back(trig_expr(tr));
  if (f.empty()) return SymExpr(c);
  if (c != 1) f.insert(f.begin(), SymExpr(c));
  return SymExpr::mul(std::move(f));
}

bool lives_in_denominator(Atom a) { return a->kind != AtomKind::Exp && a->kind != AtomKind::Root; }

}  // namespace

RatFunc RatFunc::from(const SymExpr& e) {
  Converter c;
  RatFunc r = c.conv(e);
  r.reduce();
  return r;
}

SymExpr atom_to_expr(Atom a, int e) {
  SymExpr base;
  switch (a->kind) {
    case AtomKind::S:
      base = s_var;
      break;
    case AtomKind::T:
      base = t_var;
      break;
    case AtomKind::Param:
      base = SymExpr::param(a->name);
      break;
    case AtomKind::Func:
      base = SymExpr::func(a->name, a->order);
      break;
    case AtomKind::Exp:
      base = SymExpr::exp(a->arg);
      break;
    case AtomKind::Root: {
      Rational p = make_rational(e, a->index);
      if (p.get_den() == a->index) return SymExpr::pow(a->arg, p);
      // keep the root index visible so the atom comes back unchanged
      return SymExpr::pow(SymExpr::pow(a->arg, make_rational(1, a->index)), Rational(e));
    }
    case AtomKind::Log:
      base = SymExpr::log(a->arg);
      break;
    case AtomKind::Abs:
      base = SymExpr::abs(a->arg);
      break;
    case AtomKind::Sin:
      base = SymExpr::sin(a->arg);
      break;
    case AtomKind::Cos:
      base = SymExpr::cos(a->arg);
      break;
  }
  return e == 1 ? base : SymExpr::pow(base, Rational(e));
}

SymExpr poly_to_expr(const Poly& p) {
  std::vector<SymExpr> terms;
  for (const auto& [k, c] : p.terms()) terms.push_back(term_expr(c, k.mono, k.trig));
  return SymExpr::add(std::move(terms));
}

SymExpr RatFunc::to_expr() const {
  if (num_.is_zero()) return SymExpr();
  mpz_class l = 1;
  std::map<Atom, int, decltype(&atom_less)> low(&atom_less);
  for (const auto& [k, c] : num_.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [a, e] : k.mono)
      if (e < 0 && lives_in_denominator(a)) {
        auto [it, fresh] = low.emplace(a, e);
        if (!fresh) it->second = std::min(it->second, e);
      }
  }
  Monomial shift;
  for (const auto& [a, e] : low) shift.emplace_back(a, -e);
  Poly top = num_.times_monomial(shift, Rational(l));
  std::vector<SymExpr> den;
  if (l != 1) den.push_back(SymExpr(Rational(l)));
  for (const auto& [a, e] : shift) den.push_back(atom_to_expr(a, e));
  for (const auto& [f, e] : den_) {
    SymExpr fe = poly_to_expr(f);
    den.push_back(e == 1 ? fe : SymExpr::pow(fe, Rational(e)));
  }
  SymExpr n = poly_to_expr(top);
  if (den.empty()) return n;
  return SymExpr::div(n, SymExpr::mul(std::move(den)));
}

SymExpr normalize(const SymExpr& e) { return RatFunc::from(e).to_expr(); }

}  // namespace solv::sym
