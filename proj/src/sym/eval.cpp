#include "solv/sym/eval.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <unordered_map>

#include "solv/errors.hpp"
#include "solv/sym/ratfunc.hpp"

namespace solv::sym {

namespace {

class Evaluator {
 public:
  Evaluator(double s, double t, const Bindings& b) : s_(s), t_(t), b_(b) {}

  double operator()(const SymExpr& e) {
    if (e.kind() == Kind::Const) return e.value().get_d();
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    double v = compute(e);
    if (!std::isfinite(v)) throw SingularityError("non-finite value while evaluating " + print(e));
    memo_.emplace(e.id(), v);
    return v;
  }

 private:
  double compute(const SymExpr& e) {
    switch (e.kind()) {
      case Kind::Const:
        return e.value().get_d();
      case Kind::Var:
        return e.variable() == Var::S ? s_ : t_;
      case Kind::Func: {
        auto it = b_.functions.find(e.name());
        if (it == b_.functions.end()) throw SpecError("no binding for function symbol " + e.name());
        return it->second(e.order(), s_);
      }
      case Kind::Param: {
        auto it = b_.params.find(e.name());
        if (it == b_.params.end()) throw SpecError("no value for parameter " + e.name());
        return it->second;
      }
      case Kind::Add: {
        double acc = 0;
        for (const auto& c : e.args()) acc += (*this)(c);
        return acc;
      }
      case Kind::Mul: {
        double acc = 1;
        for (const auto& c : e.args()) acc *= (*this)(c);
        return acc;
      }
      case Kind::Div: {
        double d = (*this)(e.arg(1));
        if (d == 0.0) throw SingularityError("pole of " + print(e));
        return (*this)(e.arg(0)) / d;
      }
      case Kind::Pow: {
        double x = (*this)(e.arg(0));
        const Rational& k = e.value();
        if (x == 0.0 && k < 0) throw SingularityError("pole of " + print(e));
        if (is_integer(k)) return std::pow(x, k.get_d());
        if (x < 0) {
          if (k.get_den() % 2 == 0) throw SingularityError("even root of a negative value in " + print(e));
          double r = -std::pow(-x, 1.0 / k.get_den().get_d());
          return std::pow(r, k.get_num().get_d());
        }
        return std::pow(x, k.get_d());
      }
      case Kind::Sin:
        return std::sin((*this)(e.arg(0)));
      case Kind::Cos:
        return std::cos((*this)(e.arg(0)));
      case Kind::Exp:
        return std::exp((*this)(e.arg(0)));
      case Kind::Log: {
        double x = (*this)(e.arg(0));
        if (x <= 0) throw SingularityError("log of a non-positive value in " + print(e));
        return std::log(x);
      }
      case Kind::Abs:
        return std::fabs((*this)(e.arg(0)));
    }
    return 0;
  }

  double s_, t_;
  const Bindings& b_;
  std::unordered_map<const SymExpr::Node*, double> memo_;
};

SymExpr replace(const SymExpr& e, const std::function<std::optional<SymExpr>(const SymExpr&)>& leaf) {
  if (auto r = leaf(e)) return *r;
  auto args = e.args();
  if (args.empty()) return e;
  std::vector<SymExpr> out;
  out.reserve(args.size());
  bool changed = false;
  for (const auto& a : args) {
    out.push_back(replace(a, leaf));
    changed = changed || out.back().id() != a.id();
  }
  if (!changed) return e;
  switch (e.kind()) {
    case Kind::Add:
      return SymExpr::add(std::move(out));
    case Kind::Mul:
      return SymExpr::mul(std::move(out));
    case Kind::Pow:
      return SymExpr::pow(out[0], e.value());
    case Kind::Div:
      return SymExpr::div(out[0], out[1]);
    case Kind::Sin:
      return SymExpr::sin(out[0]);
    case Kind::Cos:
      return SymExpr::cos(out[0]);
    case Kind::Exp:
      return SymExpr::exp(out[0]);
    case Kind::Log:
      return SymExpr::log(out[0]);
    case Kind::Abs:
      return SymExpr::abs(out[0]);
    default:
      return e;
  }
}

}  // namespace

double eval(const SymExpr& e, double s, double t, const Bindings& b) { return Evaluator(s, t, b)(e); }

Bindings Bindings::from_exprs(const std::map<std::string, SymExpr>& functions, const std::map<std::string, double>& params) {
  Bindings out;
  out.params = params;
  for (const auto& [name, expr] : functions) {
    if (expr.depends_on(Var::T)) throw DomainError("binding for " + name + " depends on t");
    auto derivs = std::make_shared<std::vector<SymExpr>>(1, expr);
    auto p = std::make_shared<std::map<std::string, double>>(params);
    out.functions[name] = [derivs, p](int order, double s) {
      while (static_cast<int>(derivs->size()) <= order) derivs->push_back(differentiate(derivs->back(), Var::S));
      Bindings inner;
      inner.params = *p;
      return eval((*derivs)[static_cast<std::size_t>(order)], s, 0.0, inner);
    };
  }
  return out;
}

SymExpr substitute(const SymExpr& e, const std::string& name, const SymExpr& replacement) {
  if (replacement.depends_on(Var::T)) throw DomainError("replacement for " + name + " depends on t");
  std::vector<SymExpr> derivs{replacement};
  SymExpr out = replace(e, [&](const SymExpr& x) -> std::optional<SymExpr> {
    if (x.kind() != Kind::Func || x.name() != name) return std::nullopt;
    while (static_cast<int>(derivs.size()) <= x.order()) derivs.push_back(differentiate(derivs.back(), Var::S));
    return derivs[static_cast<std::size_t>(x.order())];
  });
  return normalize(out);
}

SymExpr bind_params(const SymExpr& e, const std::map<std::string, Rational>& values) {
  SymExpr out = replace(e, [&](const SymExpr& x) -> std::optional<SymExpr> {
    if (x.kind() != Kind::Param) return std::nullopt;
    auto it = values.find(x.name());
    if (it == values.end()) return std::nullopt;
    return SymExpr(it->second);
  });
  return normalize(out);
}

SymExpr resolve_abs(const SymExpr& e, const std::vector<std::pair<double, double>>& samples, const Bindings& b) {
  return replace(e, [&](const SymExpr& x) -> std::optional<SymExpr> {
    if (x.kind() != Kind::Abs || samples.empty()) return std::nullopt;
    SymExpr inner = resolve_abs(x.arg(0), samples, b);
    int sign = 0;
    for (const auto& [s, t] : samples) {
      double v = eval(inner, s, t, b);
      int sv = v > 0 ? 1 : v < 0 ? -1 : 0;
      if (sv == 0 || (sign != 0 && sv != sign)) return std::nullopt;
      sign = sv;
    }
    return sign > 0 ? inner : -inner;
  });
}

}  // namespace solv::sym
