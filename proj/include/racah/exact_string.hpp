#pragma once

#include <string>
#include <string_view>

#include "racah/algebraic.hpp"

namespace racah {

/// Parses radical strings as they appear in catalog documents and CLI output:
/// "0", "-1/2", "sqrt(3)", "sqrt(1/2)", "-sqrt(3)/2", "1/2*sqrt(3)",
/// plus sums of such terms like "1/2+1/2*sqrt(3)".
inline AlgebraicNumber parse_exact(std::string_view s) {
  auto fail = [&]() -> AlgebraicNumber {
    throw std::invalid_argument("bad exact value '" + std::string(s) + "'");
  };

  // strip whitespace
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) return fail();

  AlgebraicNumber total;
  size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    // term extends to the next top-level +/-
    size_t end = pos;
    int depth = 0;
    for (; end < t.size(); ++end) {
      if (t[end] == '(') ++depth;
      if (t[end] == ')') --depth;
      if (depth == 0 && (t[end] == '+' || t[end] == '-')) break;
    }
    std::string_view term(t.data() + pos, end - pos);
    if (term.empty()) return fail();

    AlgebraicNumber value;
    size_t sq = term.find("sqrt(");
    if (sq == std::string_view::npos) {
      value = AlgebraicNumber(Rational::from_string(term));
    } else {
      size_t close = term.find(')', sq);
      if (close == std::string_view::npos) return fail();
      Rational radicand = Rational::from_string(term.substr(sq + 5, close - sq - 5));
      Rational coeff(1);
      if (sq > 0) {
        if (term[sq - 1] != '*') return fail();
        coeff = Rational::from_string(term.substr(0, sq - 1));
      }
      if (close + 1 < term.size()) {
        if (term[close + 1] != '/') return fail();
        coeff /= Rational::from_string(term.substr(close + 2));
      }
      value = AlgebraicNumber(coeff) * AlgebraicNumber::sqrt_rational(radicand);
    }
    if (sign < 0) value = -value;
    total += value;
    pos = end;
  }
  return total;
}

}  // namespace racah
