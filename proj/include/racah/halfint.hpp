#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace racah {

/// Half-integer stored as twice its value, so j = 0, 1/2, 1, 3/2, ... are all
/// exact. Used for SU(2) labels j, m, k, q and the compact irrep catalog.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(int whole) : twice_(2 * whole) {}
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  /// Accepts "3", "-2", "5/2", "-1/2".
  static HalfInt parse(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return HalfInt(parse_int(s));
    if (s.substr(slash + 1) != "2")
      throw std::invalid_argument("HalfInt: denominator must be 2 in '" + std::string(s) + "'");
    return from_twice(parse_int(s.substr(0, slash)));
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_negative() const { return twice_ < 0; }
  /// For integer values only.
  constexpr int whole() const { return twice_ / 2; }
  double to_double() const { return twice_ / 2.0; }

  /// Dimension 2j+1 of the spin-j irrep.
  constexpr int dim() const { return twice_ + 1; }

  std::string to_string() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  /// Step by one unit (m -> m+1).
  HalfInt& operator++() {
    twice_ += 2;
    return *this;
  }

 private:
  static int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("HalfInt: empty");
    bool neg = s[0] == '-';
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("HalfInt: bad value");
    int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("HalfInt: bad digit");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  }

  int twice_;
};

/// (-1)^e for integer-valued half-int exponent e; throws on genuine half-odd
/// exponents, which would be a sign error in the calling formula.
inline int parity_phase(HalfInt e) {
  if (!e.is_integer()) throw std::domain_error("parity_phase: exponent " + e.to_string() + " is not an integer");
  return e.whole() % 2 == 0 ? 1 : -1;
}

/// Triangle rule |a-b| <= c <= a+b with integer perimeter.
inline bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  if (c < HalfInt::from_twice(std::abs(a.twice() - b.twice())) || a + b < c) return false;
  return (a + b + c).is_integer();
}

/// m is a valid projection of j: |m| <= j and j+m integral.
inline bool valid_projection(HalfInt j, HalfInt m) {
  return (j + m).is_integer() && -j <= m && m <= j;
}

}  // namespace racah
