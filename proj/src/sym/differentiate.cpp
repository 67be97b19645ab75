#include <unordered_map>

#include "solv/sym/expr.hpp"

namespace solv::sym {

namespace {

class Deriv {
 public:
  explicit Deriv(Var v) : v_(v) {}

  SymExpr operator()(const SymExpr& e) {
    if (!e.depends_on(v_)) return SymExpr();
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    SymExpr d = compute(e);
    memo_.emplace(e.id(), d);
    return d;
  }

 private:
  SymExpr compute(const SymExpr& e) {
    switch (e.kind()) {
      case Kind::Var:
        return SymExpr(1);
      case Kind::Func:
        return SymExpr::func(e.name(), e.order() + 1);
      case Kind::Add: {
        SymExpr acc;
        for (const auto& c : e.args()) acc = acc + (*this)(c);
        return acc;
      }
      case Kind::Mul: {
        auto f = e.args();
        SymExpr acc;
        for (std::size_t i = 0; i < f.size(); ++i) {
          SymExpr di = (*this)(f[i]);
          if (di.is_zero()) continue;
          SymExpr term = di;
          for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i) term = term * f[j];
          acc = acc + term;
        }
        return acc;
      }
      case Kind::Div: {
        const SymExpr& n = e.arg(0);
        const SymExpr& d = e.arg(1);
        SymExpr dn = (*this)(n);
        SymExpr dd = (*this)(d);
        if (dd.is_zero()) return dn / d;
        return (dn * d - n * dd) / pow(d, 2);
      }
      case Kind::Pow: {
        const Rational& k = e.value();
        return SymExpr(k) * pow(e.arg(0), Rational(k - 1)) * (*this)(e.arg(0));
      }
      case Kind::Sin:
        return cos(e.arg(0)) * (*this)(e.arg(0));
      case Kind::Cos:
        return -(sin(e.arg(0)) * (*this)(e.arg(0)));
      case Kind::Exp:
        return e * (*this)(e.arg(0));
      case Kind::Log:
        return (*this)(e.arg(0)) / e.arg(0);
      case Kind::Abs:
        // transparent away from zero: |u|' = |u| u'/u
        return e * (*this)(e.arg(0)) / e.arg(0);
      default:
        return SymExpr();
    }
  }

  Var v_;
  std::unordered_map<const SymExpr::Node*, SymExpr> memo_;
};

}  // namespace

SymExpr differentiate(const SymExpr& e, Var v) { return Deriv(v)(e); }

}  // namespace solv::sym
