#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace racah {

/// Exact rational arithmetic on 128-bit integers.
///
/// All operations reduce to lowest terms and throw std::overflow_error
/// instead of wrapping, so a result is either exact or an exception.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

  static Rational from_string(std::string_view s);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  long long num_ll() const { return to_ll(num_); }
  long long den_ll() const { return to_ll(den_); }

  Rational operator-() const { return Rational(-num_, den_, no_normalize{}); }

  Rational& operator+=(const Rational& o) {
    Int g = gcd(den_, o.den_);
    Int lhs = mul(num_, o.den_ / g);
    Int rhs = mul(o.num_, den_ / g);
    num_ = add(lhs, rhs);
    den_ = mul(den_, o.den_ / g);
    reduce();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    Int g1 = gcd(abs_i(num_), o.den_);
    Int g2 = gcd(o.abs_num(), den_);
    num_ = mul(num_ / g1, o.num_ / g2);
    den_ = mul(den_ / g2, o.den_ / g1);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this *= Rational(o.den_, o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mul(a.num_, b.den_) < mul(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const {
    std::string s = int_to_string(num_);
    if (den_ != 1) s += "/" + int_to_string(den_);
    return s;
  }

  static Int gcd(Int a, Int b) {
    a = abs_i(a);
    b = abs_i(b);
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

 private:
  struct no_normalize {};
  Rational(Int n, Int d, no_normalize) : num_(n), den_(d) {}

  static Int abs_i(Int v) { return v < 0 ? -v : v; }
  Int abs_num() const { return abs_i(num_); }

  // 2^126 keeps one headroom bit; plenty for desk-scale values.
  static Int limit() { return Int(1) << 126; }

  static Int add(Int a, Int b) {
    if (b > 0 && a > limit() - b) throw std::overflow_error("Rational: add overflow");
    if (b < 0 && a < -limit() - b) throw std::overflow_error("Rational: add overflow");
    return a + b;
  }
  static Int mul(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int r = a * b;
    if (r / b != a || abs_i(r) > limit()) throw std::overflow_error("Rational: mul overflow");
    return r;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }
  void reduce() {
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static long long to_ll(Int v) {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
      throw std::overflow_error("Rational: value exceeds 64 bits");
    return static_cast<long long>(v);
  }

  static std::string int_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string digits;
    // careful with the most negative value; abs within 128 bits is safe here
    Int u = neg ? -v : v;
    while (u > 0) {
      digits += char('0' + int(u % 10));
      u /= 10;
    }
    if (neg) digits += '-';
    return std::string(digits.rbegin(), digits.rend());
  }

  Int num_;
  Int den_;
};

inline Rational Rational::from_string(std::string_view s) {
  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) throw std::invalid_argument("Rational: empty integer");
    bool neg = false;
    size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw std::invalid_argument("Rational: bad integer");
    Int v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("Rational: bad digit in '" + std::string(t) + "'");
      v = v * 10 + (t[i] - '0');
    }
    return neg ? -v : v;
  };
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s), Int(1));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace racah
