// Test-only oracles, kept independent of the implementation paths they check.
#pragma once

#include <algorithm>

#include "racah/algebraic.hpp"
#include "racah/halfint.hpp"

namespace oracles {

using racah::AlgebraicNumber;
using racah::HalfInt;
using racah::Rational;

inline Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

// half-int sums that must land on integers
inline int as_int(HalfInt h) {
  if (!h.is_integer()) throw std::domain_error("expected integer half-int");
  return h.whole();
}

/// Closed-form Racah factorial formula for (j1 m1 j2 m2 | j m); the
/// independent check on the ladder recursion.
inline AlgebraicNumber cg_closed_form(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j,
                                      HalfInt m) {
  if (m1 + m2 != m || !racah::triangle(j1, j2, j)) return AlgebraicNumber();
  Rational delta = factorial(as_int(j1 + j2 - j)) * factorial(as_int(j1 - j2 + j)) *
                   factorial(as_int(-j1 + j2 + j)) / factorial(as_int(j1 + j2 + j) + 1);
  Rational pref = delta * Rational(j.dim()) * factorial(as_int(j1 + m1)) *
                  factorial(as_int(j1 - m1)) * factorial(as_int(j2 + m2)) *
                  factorial(as_int(j2 - m2)) * factorial(as_int(j + m)) *
                  factorial(as_int(j - m));
  Rational sum;
  int klo = std::max({0, as_int(j2 - j - m1), as_int(j1 - j + m2)});
  int khi = std::min({as_int(j1 + j2 - j), as_int(j1 - m1), as_int(j2 + m2)});
  for (int k = klo; k <= khi; ++k) {
    Rational term =
        Rational(1) / (factorial(k) * factorial(as_int(j1 + j2 - j) - k) *
                       factorial(as_int(j1 - m1) - k) * factorial(as_int(j2 + m2) - k) *
                       factorial(as_int(j - j2 + m1) + k) * factorial(as_int(j - j1 - m2) + k));
    sum += (k % 2 ? -term : term);
  }
  return AlgebraicNumber(sum) * AlgebraicNumber::sqrt_rational(pref);
}

}  // namespace oracles
