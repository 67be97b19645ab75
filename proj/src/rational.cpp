#include "solv/rational.hpp"

#include <cctype>

#include "solv/errors.hpp"

namespace solv {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  s = s.substr(i);
  if (s.empty()) throw SpecError("empty rational literal");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool neg = !whole.empty() && whole[0] == '-';
      if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
      if (whole.empty()) whole = "0";
      for (char c : whole + frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw SpecError("bad rational literal: " + text);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      Rational q(mpz_class(whole + frac, 10), scale);
      q.canonicalize();
      return neg ? Rational(-q) : q;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      char c = s[k];
      bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                ((c == '-' || c == '+') && (k == 0 || s[k - 1] == '/'));
      if (!ok) throw SpecError("bad rational literal: " + text);
    }
    if (s[0] == '+') s = s.substr(1);
    Rational q(s, 10);
    if (q.get_den() == 0) throw SpecError("zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw SpecError("bad rational literal: " + text);
  }
}

}  // namespace solv
