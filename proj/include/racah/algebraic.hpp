#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "racah/rational.hpp"

namespace racah {

/// Exact real scalar of the form sum_i q_i * sqrt(r_i) with rational q_i and
/// distinct square-free positive integer radicands r_i. Closed under +, -, *.
///
/// This covers everything the coupling calculus produces: single SU(2)
/// coefficients are +-sqrt(rational), and recoupling sums stay inside the
/// ring generated by such terms.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(const Rational& q) {
    if (!q.is_zero()) terms_[1] = q;
  }
  AlgebraicNumber(long long n) : AlgebraicNumber(Rational(n)) {}

  /// sqrt(q) for q >= 0, reduced to canonical form: sqrt(p/d) = sqrt(p*d)/d.
  static AlgebraicNumber sqrt_rational(const Rational& q) {
    if (q.is_negative()) throw std::domain_error("AlgebraicNumber: sqrt of negative");
    if (q.is_zero()) return AlgebraicNumber();
    long long n = q.num_ll();
    long long d = q.den_ll();
    auto [s, r] = extract_square(checked_ll_mul(n, d));
    AlgebraicNumber out;
    out.terms_[r] = Rational(s, d);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational() : it->second;
  }
  /// The whole value as a rational; throws if an irrational term remains.
  Rational as_rational() const {
    if (!is_rational()) throw std::domain_error("AlgebraicNumber: not rational");
    return rational_part();
  }

  /// True when the value is q*sqrt(r) for a single radicand.
  bool is_single_term() const { return terms_.size() <= 1; }

  const std::map<long long, Rational>& terms() const { return terms_; }

  AlgebraicNumber operator-() const {
    AlgebraicNumber out;
    for (const auto& [r, q] : terms_) out.terms_[r] = -q;
    return out;
  }

  AlgebraicNumber& operator+=(const AlgebraicNumber& o) {
    for (const auto& [r, q] : o.terms_) {
      auto it = terms_.find(r);
      if (it == terms_.end()) {
        terms_[r] = q;
      } else {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this += -o; }

  AlgebraicNumber& operator*=(const AlgebraicNumber& o) {
    AlgebraicNumber out;
    for (const auto& [r1, q1] : terms_) {
      for (const auto& [r2, q2] : o.terms_) {
        // sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)*(r2/g)) with g = gcd(r1,r2);
        // both factors square-free keeps the product square-free.
        long long g = static_cast<long long>(Rational::gcd(r1, r2));
        long long rad = checked_ll_mul(r1 / g, r2 / g);
        Rational coeff = q1 * q2 * Rational(g);
        auto it = out.terms_.find(rad);
        if (it == out.terms_.end()) {
          if (!coeff.is_zero()) out.terms_[rad] = coeff;
        } else {
          it->second += coeff;
          if (it->second.is_zero()) out.terms_.erase(it);
        }
      }
    }
    terms_ = std::move(out.terms_);
    return *this;
  }

  /// Division by a nonzero single-term value q*sqrt(r).
  AlgebraicNumber& operator/=(const AlgebraicNumber& o) {
    if (o.is_zero()) throw std::domain_error("AlgebraicNumber: division by zero");
    if (!o.is_single_term())
      throw std::domain_error("AlgebraicNumber: division by multi-term value");
    auto [r, q] = *o.terms_.begin();
    // 1/(q*sqrt(r)) = sqrt(r)/(q*r)
    AlgebraicNumber inv;
    inv.terms_[r] = Rational(1) / (q * Rational(r));
    return *this *= inv;
  }

  /// Exact square root; only the rational case stays inside the ring.
  AlgebraicNumber sqrt() const {
    if (is_zero()) return AlgebraicNumber();
    if (!is_rational())
      throw std::domain_error("AlgebraicNumber: sqrt of irrational value");
    return sqrt_rational(rational_part());
  }

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

  /// Exact sign for single-term values; falls back to a guarded double
  /// evaluation for sums of radicals.
  int sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_.begin()->second.sign();
    double v = to_double();
    if (std::abs(v) < 1e-9)
      throw std::domain_error("AlgebraicNumber: sign of near-zero multi-term value");
    return v < 0 ? -1 : 1;
  }

  double to_double() const {
    double v = 0;
    for (const auto& [r, q] : terms_) v += q.to_double() * std::sqrt(double(r));
    return v;
  }

  /// Canonical radical string: "0", "-1/2", "1/2*sqrt(3)", "1-1/2*sqrt(2)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [r, q] : terms_) {
      std::string t;
      if (r == 1) {
        t = q.to_string();
      } else {
        std::string root = "sqrt(" + std::to_string(r) + ")";
        if (q == Rational(1))
          t = root;
        else if (q == Rational(-1))
          t = "-" + root;
        else
          t = q.to_string() + "*" + root;
      }
      if (!first && t[0] != '-') out += "+";
      out += t;
      first = false;
    }
    return out;
  }

 private:
  static long long checked_ll_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
      throw std::overflow_error("AlgebraicNumber: radicand overflow");
    return static_cast<long long>(r);
  }

  /// n = s*s*r with r square-free; trial division (desk-scale arguments).
  static std::pair<long long, long long> extract_square(long long n) {
    long long s = 1, r = 1;
    for (long long p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) s = checked_ll_mul(s, p);
      if (e % 2) r = checked_ll_mul(r, p);
    }
    r = checked_ll_mul(r, n);  // leftover prime
    return {s, r};
  }

  std::map<long long, Rational> terms_;
};

/// Exact complex scalar over AlgebraicNumber real and imaginary parts.
struct ExactComplex {
  AlgebraicNumber re, im;

  ExactComplex() = default;
  ExactComplex(AlgebraicNumber r) : re(std::move(r)) {}
  ExactComplex(AlgebraicNumber r, AlgebraicNumber i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long long n) : re(n) {}

  static ExactComplex i() { return ExactComplex(AlgebraicNumber(0), AlgebraicNumber(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  ExactComplex conj() const { return ExactComplex(re, -im); }

  ExactComplex operator-() const { return ExactComplex(-re, -im); }
  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    AlgebraicNumber r = re * o.re - im * o.im;
    AlgebraicNumber i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.is_zero() ? "" : re.to_string();
    std::string it = im.to_string();
    if (!s.empty() && it[0] != '-') s += "+";
    return s + "(" + it + ")i";
  }
};

}  // namespace racah
