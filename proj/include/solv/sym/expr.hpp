#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "solv/rational.hpp"

namespace solv::sym {

enum class Kind : unsigned char {
  Const,
  Var,
  Func,   // a, b, r applied to s, with derivative order
  Param,  // named constant such as lambda or a0
  Add,
  Mul,
  Pow,  // rational exponent
  Div,
  Sin,
  Cos,
  Exp,
  Log,
  Abs
};

enum class Var : char { S = 's', T = 't' };

// Immutable expression tree. Copies share nodes.
class SymExpr {
 public:
  struct Node;

  SymExpr();  // the constant 0
  SymExpr(long v);
  SymExpr(int v) : SymExpr(static_cast<long>(v)) {}
  SymExpr(const Rational& q);

  static SymExpr var(Var v);
  static SymExpr func(const std::string& name, int order = 0);
  static SymExpr param(const std::string& name);
  static SymExpr add(std::vector<SymExpr> terms);
  static SymExpr mul(std::vector<SymExpr> factors);
  static SymExpr pow(const SymExpr& base, const Rational& exponent);
  static SymExpr div(const SymExpr& num, const SymExpr& den);
  static SymExpr sin(const SymExpr& arg);
  static SymExpr cos(const SymExpr& arg);
  static SymExpr exp(const SymExpr& arg);
  static SymExpr log(const SymExpr& arg);
  static SymExpr abs(const SymExpr& arg);

  Kind kind() const;
  const Rational& value() const;  // Const value, or Pow exponent
  Var variable() const;
  const std::string& name() const;
  int order() const;
  std::span<const SymExpr> args() const;
  const SymExpr& arg(std::size_t i = 0) const { return args()[i]; }

  const Node* id() const { return node_.get(); }

  bool is_const() const { return kind() == Kind::Const; }
  bool is_zero() const;
  bool is_one() const;
  bool depends_on(Var v) const;
  // True if the function symbol (any derivative order) occurs.
  bool contains_func(const std::string& name) const;

  std::string str() const;

  friend bool operator==(const SymExpr& a, const SymExpr& b);

 private:
  explicit SymExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SymExpr::Node {
  Kind kind;
  Rational value;
  Var var = Var::S;
  std::string name;
  int order = 0;
  std::vector<SymExpr> args;
  bool has_s = false;
  bool has_t = false;
};

SymExpr operator+(const SymExpr& a, const SymExpr& b);
SymExpr operator-(const SymExpr& a, const SymExpr& b);
SymExpr operator-(const SymExpr& a);
SymExpr operator*(const SymExpr& a, const SymExpr& b);
SymExpr operator/(const SymExpr& a, const SymExpr& b);
SymExpr pow(const SymExpr& base, const Rational& exponent);
SymExpr sin(const SymExpr& e);
SymExpr cos(const SymExpr& e);
SymExpr exp(const SymExpr& e);
SymExpr log(const SymExpr& e);
SymExpr abs(const SymExpr& e);

inline const SymExpr s_var = SymExpr::var(Var::S);
inline const SymExpr t_var = SymExpr::var(Var::T);

std::string print(const SymExpr& e);
SymExpr parse(const std::string& text);

// Structural derivative; no canonicalization beyond dropping zero terms.
SymExpr differentiate(const SymExpr& e, Var v);

}  // namespace solv::sym
