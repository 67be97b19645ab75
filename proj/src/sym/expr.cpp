#include "solv/sym/expr.hpp"

#include <functional>

#include "solv/errors.hpp"

namespace solv::sym {

namespace {

using NodePtr = std::shared_ptr<const SymExpr::Node>;

const NodePtr& zero_node() {
  static const NodePtr z = [] {
    auto n = std::make_shared<SymExpr::Node>();
    n->kind = Kind::Const;
    n->value = 0;
    return n;
  }();
  return z;
}

}  // namespace

SymExpr::SymExpr() : node_(zero_node()) {}

SymExpr::SymExpr(long v) : SymExpr(Rational(v)) {}

SymExpr::SymExpr(const Rational& q) {
  if (q == 0) {
    node_ = zero_node();
    return;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = q;
  n->value.canonicalize();
  node_ = std::move(n);
}

namespace {

SymExpr::Node make(Kind k, std::vector<SymExpr> args) {
  SymExpr::Node n;
  n.kind = k;
  for (const auto& a : args) {
    n.has_s = n.has_s || a.depends_on(Var::S);
    n.has_t = n.has_t || a.depends_on(Var::T);
  }
  n.args = std::move(args);
  return n;
}

}  // namespace

SymExpr SymExpr::var(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = v;
  n->has_s = v == Var::S;
  n->has_t = v == Var::T;
  return SymExpr(std::move(n));
}

SymExpr SymExpr::func(const std::string& name, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->name = name;
  n->order = order;
  n->has_s = true;
  return SymExpr(std::move(n));
}

SymExpr SymExpr::param(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->name = name;
  return SymExpr(std::move(n));
}

SymExpr SymExpr::add(std::vector<SymExpr> terms) {
  std::vector<SymExpr> flat;
  for (auto& t : terms) {
    if (t.kind() == Kind::Add) {
      for (const auto& c : t.args()) flat.push_back(c);
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (flat.empty()) return SymExpr();
  if (flat.size() == 1) return flat.front();
  return SymExpr(std::make_shared<Node>(make(Kind::Add, std::move(flat))));
}

SymExpr SymExpr::mul(std::vector<SymExpr> factors) {
  std::vector<SymExpr> flat;
  for (auto& f : factors) {
    if (f.kind() == Kind::Mul) {
      for (const auto& c : f.args()) flat.push_back(c);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return SymExpr(1);
  if (flat.size() == 1) return flat.front();
  return SymExpr(std::make_shared<Node>(make(Kind::Mul, std::move(flat))));
}

SymExpr SymExpr::pow(const SymExpr& base, const Rational& exponent) {
  auto n = std::make_shared<Node>(make(Kind::Pow, {base}));
  n->value = exponent;
  n->value.canonicalize();
  return SymExpr(std::move(n));
}

SymExpr SymExpr::div(const SymExpr& num, const SymExpr& den) {
  return SymExpr(std::make_shared<Node>(make(Kind::Div, {num, den})));
}

SymExpr SymExpr::sin(const SymExpr& a) { return SymExpr(std::make_shared<Node>(make(Kind::Sin, {a}))); }
SymExpr SymExpr::cos(const SymExpr& a) { return SymExpr(std::make_shared<Node>(make(Kind::Cos, {a}))); }
SymExpr SymExpr::exp(const SymExpr& a) { return SymExpr(std::make_shared<Node>(make(Kind::Exp, {a}))); }
SymExpr SymExpr::log(const SymExpr& a) { return SymExpr(std::make_shared<Node>(make(Kind::Log, {a}))); }
SymExpr SymExpr::abs(const SymExpr& a) { return SymExpr(std::make_shared<Node>(make(Kind::Abs, {a}))); }

Kind SymExpr::kind() const { return node_->kind; }
const Rational& SymExpr::value() const { return node_->value; }
Var SymExpr::variable() const { return node_->var; }
const std::string& SymExpr::name() const { return node_->name; }
int SymExpr::order() const { return node_->order; }
std::span<const SymExpr> SymExpr::args() const { return node_->args; }

bool SymExpr::is_zero() const { return kind() == Kind::Const && value() == 0; }
bool SymExpr::is_one() const { return kind() == Kind::Const && value() == 1; }

bool SymExpr::depends_on(Var v) const { return v == Var::S ? node_->has_s : node_->has_t; }

bool SymExpr::contains_func(const std::string& name) const {
  if (kind() == Kind::Func) return this->name() == name;
  for (const auto& a : args())
    if (a.contains_func(name)) return true;
  return false;
}

std::string SymExpr::str() const { return print(*this); }

bool operator==(const SymExpr& a, const SymExpr& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Const:
      return a.value() == b.value();
    case Kind::Var:
      return a.variable() == b.variable();
    case Kind::Func:
      return a.name() == b.name() && a.order() == b.order();
    case Kind::Param:
      return a.name() == b.name();
    case Kind::Pow:
      if (a.value() != b.value()) return false;
      break;
    default:
      break;
  }
  auto x = a.args();
  auto y = b.args();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == y[i])) return false;
  return true;
}

// Operators fold the trivial cases so hand-built trees stay readable.

SymExpr operator+(const SymExpr& a, const SymExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_const() && b.is_const()) return SymExpr(Rational(a.value() + b.value()));
  return SymExpr::add({a, b});
}

SymExpr operator-(const SymExpr& a) {
  if (a.is_const()) return SymExpr(Rational(-a.value()));
  if (a.kind() == Kind::Mul && a.arg(0).is_const()) {
    std::vector<SymExpr> f(a.args().begin(), a.args().end());
    Rational c = -f[0].value();
    if (c == 1) {
      f.erase(f.begin());
    } else {
      f[0] = SymExpr(c);
    }
    return SymExpr::mul(std::move(f));
  }
  return SymExpr::mul({SymExpr(-1), a});
}

SymExpr operator-(const SymExpr& a, const SymExpr& b) { return a + (-b); }

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  if (a.is_zero() || b.is_zero()) return SymExpr();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_const() && b.is_const()) return SymExpr(Rational(a.value() * b.value()));
  if (b.is_const()) return SymExpr::mul({b, a});
  return SymExpr::mul({a, b});
}

SymExpr operator/(const SymExpr& a, const SymExpr& b) {
  if (b.is_const()) {
    if (b.value() == 0) throw SingularityError("division by the constant 0");
    if (a.is_const()) return SymExpr(Rational(a.value() / b.value()));
    if (b.is_one()) return a;
  }
  if (a.is_zero()) return SymExpr();
  return SymExpr::div(a, b);
}

SymExpr pow(const SymExpr& base, const Rational& exponent) {
  if (exponent == 0) return SymExpr(1);
  if (exponent == 1) return base;
  if (base.is_const() && is_integer(exponent)) {
    long k = exponent.get_num().get_si();
    Rational v = base.value();
    if (v == 0 && k < 0) throw SingularityError("0 raised to a negative power");
    mpz_class n, d;
    unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(n.get_mpz_t(), v.get_num().get_mpz_t(), m);
    mpz_pow_ui(d.get_mpz_t(), v.get_den().get_mpz_t(), m);
    Rational r = k < 0 ? Rational(d, n) : Rational(n, d);
    r.canonicalize();
    return SymExpr(r);
  }
  return SymExpr::pow(base, exponent);
}

SymExpr sin(const SymExpr& e) { return e.is_zero() ? SymExpr() : SymExpr::sin(e); }
SymExpr cos(const SymExpr& e) { return e.is_zero() ? SymExpr(1) : SymExpr::cos(e); }
SymExpr exp(const SymExpr& e) { return e.is_zero() ? SymExpr(1) : SymExpr::exp(e); }
SymExpr log(const SymExpr& e) { return e.is_one() ? SymExpr() : SymExpr::log(e); }
SymExpr abs(const SymExpr& e) {
  if (e.is_const()) return SymExpr(Rational(::abs(e.value())));
  return SymExpr::abs(e);
}

}  // namespace solv::sym
