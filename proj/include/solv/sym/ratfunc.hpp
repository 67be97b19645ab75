#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/sym/expr.hpp"

namespace solv::sym {

// Opaque "variables" of the normal form. Interned, so pointer identity is
// equality; ordering goes by (kind, key).
enum class AtomKind : unsigned char { S, T, Param, Func, Exp, Log, Abs, Root, Sin, Cos };

struct AtomInfo {
  AtomKind kind;
  std::string name;  // Param / Func
  int order = 0;     // Func derivative order
  int index = 0;     // Root: n-th root
  SymExpr arg;       // canonical argument for Exp/Log/Abs/Root/Sin/Cos
  std::string key;
  bool has_s = false;
  bool has_t = false;
};

using Atom = const AtomInfo*;

Atom atom_s();
Atom atom_t();
Atom atom_param(const std::string& name);
Atom atom_func(const std::string& name, int order);
Atom atom_of(AtomKind kind, const SymExpr& canonical_arg, int index = 0);

bool atom_less(Atom a, Atom b);

using Monomial = std::vector<std::pair<Atom, int>>;  // sorted, nonzero exponents

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, int k);
int mono_degree(const Monomial& m, Atom v);
bool mono_less(const Monomial& a, const Monomial& b);

// 1, cos(n t) or sin(n t)
struct Trig {
  enum Kind : unsigned char { One = 0, Cos = 1, Sin = 2 };
  Kind kind = One;
  int n = 0;
  static Trig one() { return {}; }
  static Trig cos(int n) { return {Cos, n}; }
  static Trig sin(int n) { return {Sin, n}; }
  bool is_one() const { return kind == One; }
  friend bool operator==(const Trig&, const Trig&) = default;
};
bool trig_less(const Trig& a, const Trig& b);

struct TermKey {
  Monomial mono;
  Trig trig;
};

struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const;
};

// Laurent polynomial over atoms with coefficients in the trig basis.
class Poly {
 public:
  using Terms = std::map<TermKey, Rational, TermKeyLess>;

  Poly() = default;
  Poly(const Rational& c);
  static Poly atom(Atom a, int e = 1);
  static Poly trig(Trig tr);
  static Poly term(const Rational& c, Monomial m, Trig tr = Trig::one());

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<Rational> constant_value() const;
  bool is_single_term() const { return terms_.size() == 1; }
  bool has_trig() const;
  bool depends_on_t() const;
  bool depends_on_s() const;

  void add_term(const TermKey& k, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c = 1) const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  Terms terms_;
};

// content * monomial * primitive, with the primitive part having integer
// coefficients of gcd 1, a positive first term and no monomial factor.
struct ContentSplit {
  Rational content;
  Monomial monomial;
  Poly primitive;
};
ContentSplit split_content(const Poly& p);

// Exact division in the Laurent ring; nullopt when f does not divide p or the
// division strategy does not apply.
std::optional<Poly> exact_divide(const Poly& p, const Poly& f);

class RatFunc {
 public:
  using Factors = std::map<Poly, int>;

  RatFunc() = default;
  RatFunc(const Rational& c) : num_(c) {}
  explicit RatFunc(Poly p) : num_(std::move(p)) {}
  RatFunc(Poly num, Factors den);

  // Canonicalizing conversion of an expression tree.
  static RatFunc from(const SymExpr& e);

  const Poly& num() const { return num_; }
  const Factors& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rational> constant_value() const;
  bool depends_on_t() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc pow(long k) const;
  RatFunc inverse() const;
  RatFunc derivative(Var v) const;

  // Cancels common factors and folds root/abs powers. Idempotent.
  void reduce();
  RatFunc reduced() const {
    RatFunc r = *this;
    r.reduce();
    return r;
  }

  SymExpr to_expr() const;

 private:
  bool reduce_powers();

  Poly num_;
  Factors den_;
};

SymExpr poly_to_expr(const Poly& p);
SymExpr atom_to_expr(Atom a, int e);

// Canonical form; idempotent.
SymExpr normalize(const SymExpr& e);

}  // namespace solv::sym
