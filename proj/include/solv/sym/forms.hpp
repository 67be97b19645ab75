#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solv/sym/expr.hpp"

namespace solv::sym {

// c * monomial * cofactor with c rational and the cofactor primitive.
struct CoefficientContent {
  Rational constant;
  SymExpr monomial;
  SymExpr cofactor;
};
CoefficientContent content_of(const SymExpr& coefficient);

// Sum of A[n] cos(n t) + B[n] sin(n t), n = 0..k. B[0] is kept as 0 so both
// vectors index by n.
struct FourierForm {
  int k = 0;
  std::vector<SymExpr> A{SymExpr()};
  std::vector<SymExpr> B{SymExpr()};

  SymExpr a(int n) const { return n >= 0 && n <= k ? A[static_cast<std::size_t>(n)] : SymExpr(); }
  SymExpr b(int n) const { return n >= 1 && n <= k ? B[static_cast<std::size_t>(n)] : SymExpr(); }
};

struct FourierExpansion {
  FourierForm form;
  int denominator_power = 0;
  SymExpr denominator{1};  // what e was multiplied by, to that power
};

// Clears the t-dependent denominator with its minimal power and splits the
// resulting trig polynomial on the basis {1, cos nt, sin nt}.
FourierExpansion to_fourier(const SymExpr& e);
SymExpr fourier_sum(const FourierForm& f);

// Substitutes a function symbol into every coefficient (and the cleared
// denominator) and recomputes the degree.
FourierExpansion specialize(const FourierExpansion& f, const std::string& name, const SymExpr& replacement);

struct QuasiTerm {
  int power = 0;   // of t
  int weight = 0;  // of exp(t)
  SymExpr coefficient;
};

struct QuasiPolyForm {
  std::vector<QuasiTerm> terms;  // sorted by (power, weight), nonzero

  SymExpr coefficient(int power, int weight = 0) const;
  int degree() const;  // highest power of t, -1 when empty
};

struct QuasiPolyExpansion {
  QuasiPolyForm form;
  int denominator_power = 0;
  SymExpr denominator{1};
};

QuasiPolyExpansion to_quasipoly(const SymExpr& e);
SymExpr quasipoly_sum(const QuasiPolyForm& q);
QuasiPolyExpansion specialize(const QuasiPolyExpansion& q, const std::string& name, const SymExpr& replacement);

// a / b when that is a rational constant.
std::optional<Rational> constant_ratio(const SymExpr& a, const SymExpr& b);
// a / b when that is a single monomial term (no sums, no denominators).
std::optional<SymExpr> monomial_ratio(const SymExpr& a, const SymExpr& b);
// e / factor when the quotient is polynomial in the atoms of factor.
std::optional<SymExpr> cofactor(const SymExpr& e, const SymExpr& factor);

}  // namespace solv::sym
