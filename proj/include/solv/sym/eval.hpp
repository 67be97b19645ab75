#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "solv/sym/expr.hpp"

namespace solv::sym {

// value of the order-th derivative at s
using FunctionBinding = std::function<double(int order, double s)>;

struct Bindings {
  std::map<std::string, FunctionBinding> functions;
  std::map<std::string, double> params;

  // Binds each function symbol to an s-expression; derivatives are taken
  // symbolically on demand.
  static Bindings from_exprs(const std::map<std::string, SymExpr>& functions,
                             const std::map<std::string, double>& params = {});
};

double eval(const SymExpr& e, double s, double t, const Bindings& b = {});

// Replaces every derivative of the named function by the matching derivative
// of the replacement, then normalizes. The replacement must not involve t.
SymExpr substitute(const SymExpr& e, const std::string& name, const SymExpr& replacement);

SymExpr bind_params(const SymExpr& e, const std::map<std::string, Rational>& values);

// Replaces |u| by u or -u where u keeps one sign over all samples.
SymExpr resolve_abs(const SymExpr& e, const std::vector<std::pair<double, double>>& samples, const Bindings& b = {});

}  // namespace solv::sym
