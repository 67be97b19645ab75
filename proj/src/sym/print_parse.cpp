#include <cctype>
#include <set>

#include "solv/errors.hpp"
#include "solv/sym/expr.hpp"

namespace solv::sym {

namespace {

// Binding strength of the printed form; a child weaker than its context gets
// parentheses.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

bool is_fraction(const Rational& q) { return q.get_den() != 1; }

Prec prec_of(const SymExpr& e) {
  switch (e.kind()) {
    case Kind::Const:
      if (e.value() < 0) return kUnary;
      return is_fraction(e.value()) ? kProduct : kAtom;
    case Kind::Add:
      return kSum;
    case Kind::Mul:
      if (e.arg(0).is_const() && e.arg(0).value() < 0) return kUnary;
      return kProduct;
    case Kind::Div:
      return kProduct;
    case Kind::Pow:
      return kPower;
    default:
      return kAtom;
  }
}

void emit(const SymExpr& e, std::string& out);

void emit_wrapped(const SymExpr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  emit(e, out);
  if (wrap) out += ')';
}

void emit_exponent(const Rational& q, std::string& out) {
  out += '^';
  if (q > 0 && q.get_den() == 1) {
    out += q.get_str();
  } else {
    out += '(' + q.get_str() + ')';
  }
}

// Factors of a product. Quotients and sums are always wrapped; after the
// first factor anything that is not a power or atom is wrapped too, so the
// text reparses to the same flat product.
void emit_factors(std::span<const SymExpr> f, std::string& out) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += '*';
    Prec p = prec_of(f[i]);
    bool wrap = f[i].kind() == Kind::Div || p == kSum || p == kUnary || (i > 0 && p <= kProduct);
    emit_wrapped(f[i], wrap, out);
  }
}

// e is a product with a negative leading constant; prints it without the sign.
void emit_negated_product(const SymExpr& e, std::string& out) {
  Rational c = -e.arg(0).value();
  auto rest = e.args().subspan(1);
  if (c == 1 && rest.size() == 1) {
    emit_wrapped(rest[0], prec_of(rest[0]) < kPower, out);
    return;
  }
  if (c == 1) {
    emit_factors(rest, out);
    return;
  }
  std::vector<SymExpr> f{SymExpr(c)};
  f.insert(f.end(), rest.begin(), rest.end());
  emit_factors(f, out);
}

void emit(const SymExpr& e, std::string& out) {
  switch (e.kind()) {
    case Kind::Const:
      out += e.value().get_str();
      return;
    case Kind::Var:
      out += static_cast<char>(e.variable());
      return;
    case Kind::Func:
      out += e.name();
      out.append(static_cast<std::size_t>(e.order()), '\'');
      return;
    case Kind::Param:
      out += e.name();
      return;
    case Kind::Add: {
      auto terms = e.args();
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const SymExpr& t = terms[i];
        bool negative_const = t.is_const() && t.value() < 0;
        bool negative_prod = t.kind() == Kind::Mul && t.arg(0).is_const() && t.arg(0).value() < 0;
        if (i == 0) {
          if (negative_prod) {
            out += '-';
            emit_negated_product(t, out);
          } else {
            emit_wrapped(t, prec_of(t) <= kSum, out);
          }
          continue;
        }
        if (negative_const) {
          out += " - ";
          out += Rational(-t.value()).get_str();
        } else if (negative_prod) {
          out += " - ";
          emit_negated_product(t, out);
        } else {
          out += " + ";
          emit_wrapped(t, prec_of(t) <= kSum, out);
        }
      }
      return;
    }
    case Kind::Mul:
      if (e.arg(0).is_const() && e.arg(0).value() < 0) {
        out += '-';
        emit_negated_product(e, out);
        return;
      }
      emit_factors(e.args(), out);
      return;
    case Kind::Div: {
      const SymExpr& n = e.arg(0);
      const SymExpr& d = e.arg(1);
      emit_wrapped(n, prec_of(n) < kProduct, out);
      out += '/';
      emit_wrapped(d, prec_of(d) < kPower, out);
      return;
    }
    case Kind::Pow:
      emit_wrapped(e.arg(0), prec_of(e.arg(0)) < kAtom, out);
      emit_exponent(e.value(), out);
      return;
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Log:
    case Kind::Abs: {
      static const char* names[] = {"sin", "cos", "exp", "log", "abs"};
      out += names[static_cast<int>(e.kind()) - static_cast<int>(Kind::Sin)];
      out += '(';
      emit(e.arg(0), out);
      out += ')';
      return;
    }
  }
}

// ---------------------------------------------------------------------------

const std::set<std::string>& known_params() {
  static const std::set<std::string> p = {"lambda", "mu", "a0", "a1", "b0", "b1", "s0", "c", "q"};
  return p;
}

SymExpr negate(const SymExpr& e) {
  if (e.is_const()) return SymExpr(Rational(-e.value()));
  if (e.kind() == Kind::Mul && e.arg(0).is_const()) {
    std::vector<SymExpr> f(e.args().begin(), e.args().end());
    f[0] = SymExpr(Rational(-f[0].value()));
    return SymExpr::mul(std::move(f));
  }
  return SymExpr::mul({SymExpr(-1), e});
}

class Parser {
 public:
  explicit Parser(const std::string& text) : src_(text) {}

  SymExpr run() {
    SymExpr e = sum();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  SymExpr sum() {
    std::vector<SymExpr> terms{product()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(product());
      } else if (accept('-')) {
        terms.push_back(negate(product()));
      } else {
        break;
      }
    }
    return SymExpr::add(std::move(terms));
  }

  SymExpr product() {
    SymExpr left = unary();
    for (;;) {
      if (accept('*')) {
        left = SymExpr::mul({left, unary()});
      } else if (accept('/')) {
        std::size_t at = pos_;
        SymExpr right = unary();
        if (left.is_const() && right.is_const()) {
          if (right.value() == 0) throw ParseError("division by zero literal", at);
          left = SymExpr(Rational(left.value() / right.value()));
        } else {
          left = SymExpr::div(left, right);
        }
      } else {
        return left;
      }
    }
  }

  SymExpr unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return power();
  }

  SymExpr power() {
    SymExpr base = primary();
    if (accept('^')) {
      std::size_t at = pos_;
      SymExpr ex = unary();
      if (!ex.is_const()) throw ParseError("exponent must be a rational literal", at);
      return SymExpr::pow(base, ex.value());
    }
    return base;
  }

  SymExpr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      SymExpr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  SymExpr number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
    try {
      return SymExpr(parse_rational(src_.substr(start, pos_ - start)));
    } catch (const SpecError&) {
      throw ParseError("malformed number", start);
    }
  }

  SymExpr identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    std::string id = src_.substr(start, pos_ - start);
    int primes = 0;
    while (pos_ < src_.size() && src_[pos_] == '\'') {
      ++primes;
      ++pos_;
    }
    if (id == "a" || id == "b" || id == "r") {
      // "a(s)" and "a'(s)" are accepted as spellings of the bare symbol
      std::size_t save = pos_;
      skip_ws();
      if (src_.compare(pos_, 3, "(s)") == 0) {
        pos_ += 3;
      } else {
        pos_ = save;
      }
      return SymExpr::func(id, primes);
    }
    if (primes) throw ParseError("prime marks only apply to a, b, r", start);
    if (id == "s") return s_var;
    if (id == "t") return t_var;
    if (known_params().count(id)) return SymExpr::param(id);
    static const std::set<std::string> fns = {"sin", "cos", "exp", "log", "abs", "sqrt"};
    if (fns.count(id)) {
      expect('(');
      SymExpr a = sum();
      expect(')');
      if (id == "sin") return SymExpr::sin(a);
      if (id == "cos") return SymExpr::cos(a);
      if (id == "exp") return SymExpr::exp(a);
      if (id == "log") return SymExpr::log(a);
      if (id == "abs") return SymExpr::abs(a);
      return SymExpr::pow(a, make_rational(1, 2));
    }
    throw ParseError("unknown identifier '" + id + "'", start);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print(const SymExpr& e) {
  std::string out;
  emit(e, out);
  return out;
}

SymExpr parse(const std::string& text) { return Parser(text).run(); }

}  // namespace solv::sym
