#pragma once

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "racah/algebraic.hpp"
#include "racah/halfint.hpp"
#include "racah/numeric.hpp"

namespace racah::su2 {

namespace detail {

/// Exact coupled-basis table for one product j1 (x) j2: coefficient maps
/// (j,m) -> { m1 -> (j1 m1 j2 m-m1 | j m) }, built by ladder recursion from
/// each stretched state. Condon-Shortley: the m1 = j1 coefficient of every
/// top state |j,j) is positive.
class CoupledTable {
 public:
  CoupledTable(HalfInt j1, HalfInt j2) : j1_(j1), j2_(j2) {
    for (HalfInt j = j1 + j2; triangle(j1, j2, j); j -= 1) build_j(j);
  }

  const AlgebraicNumber* find(HalfInt j, HalfInt m, HalfInt m1) const {
    auto it = states_.find({j.twice(), m.twice()});
    if (it == states_.end()) return nullptr;
    auto jt = it->second.find(m1.twice());
    return jt == it->second.end() ? nullptr : &jt->second;
  }

 private:
  using StateVec = std::map<int, AlgebraicNumber>;  // 2*m1 -> coefficient

  // sqrt(j(j+1) - m(m+1)) as exact value, the J+ matrix element factor
  static AlgebraicNumber raise_factor(HalfInt j, HalfInt m) {
    long long num = (long long)(j.twice() - m.twice()) * (j.twice() + m.twice() + 2);
    return AlgebraicNumber::sqrt_rational(Rational(num, 4));
  }
  // sqrt(j(j+1) - m(m-1)), the J- factor
  static AlgebraicNumber lower_factor(HalfInt j, HalfInt m) {
    long long num = (long long)(j.twice() + m.twice()) * (j.twice() - m.twice() + 2);
    return AlgebraicNumber::sqrt_rational(Rational(num, 4));
  }

  void build_j(HalfInt j) {
    StateVec top;
    if (j == j1_ + j2_) {
      top[j1_.twice()] = AlgebraicNumber(1);
    } else {
      // |j,j): kill with J+. The recurrence couples neighbouring m1 on the
      // m = j line: d(m1) = -d(m1-1) * X1(m1-1) / X2(j-m1).
      HalfInt lo = std::max(-j1_, j - j2_);
      AlgebraicNumber cur(1);
      top[lo.twice()] = cur;
      for (HalfInt m1 = lo + 1; m1 <= j1_; m1 += 1) {
        cur = -(cur * raise_factor(j1_, m1 - 1)) / raise_factor(j2_, j - m1);
        top[m1.twice()] = cur;
      }
      Rational norm2;
      for (const auto& [tm1, c] : top) norm2 += (c * c).as_rational();
      AlgebraicNumber norm = AlgebraicNumber::sqrt_rational(norm2);
      int cs = top.at(j1_.twice()).sign();
      for (auto& [tm1, c] : top) {
        c = c / norm;
        if (cs < 0) c = -c;
      }
    }
    states_[{j.twice(), j.twice()}] = top;

    StateVec cur = top;
    for (HalfInt m = j; m > -j; m -= 1) {
      StateVec next;
      for (const auto& [tm1, c] : cur) {
        HalfInt m1 = HalfInt::from_twice(tm1);
        HalfInt m2 = m - m1;
        if (m1 > -j1_) next[(m1 - 1).twice()] += c * lower_factor(j1_, m1);
        if (m2 > -j2_) next[m1.twice()] += c * lower_factor(j2_, m2);
      }
      AlgebraicNumber denom = lower_factor(j, m);
      for (auto it = next.begin(); it != next.end();) {
        it->second = it->second / denom;
        it = it->second.is_zero() ? next.erase(it) : std::next(it);
      }
      states_[{j.twice(), (m - 1).twice()}] = next;
      cur = std::move(next);
    }
  }

  HalfInt j1_, j2_;
  std::map<std::pair<int, int>, StateVec> states_;
};

inline const CoupledTable& coupled_table(HalfInt j1, HalfInt j2) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, CoupledTable> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{j1.twice(), j2.twice()};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.try_emplace(key, j1, j2).first;
  return it->second;
}

}  // namespace detail

/// Exact Clebsch-Gordan coefficient (j1 m1 j2 m2 | j m), Condon-Shortley
/// convention. Zero outside the triangle or when m != m1 + m2; throws when an
/// m label is not on its j's lattice.
inline AlgebraicNumber cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  if (j1.is_negative() || j2.is_negative() || j.is_negative())
    throw std::domain_error("su2::cg: negative j");
  if (!valid_projection(j1, m1) || !valid_projection(j2, m2) || !valid_projection(j, m))
    throw std::domain_error("su2::cg: projection off the m lattice");
  if (m1 + m2 != m || !triangle(j1, j2, j)) return AlgebraicNumber();
  const auto* c = detail::coupled_table(j1, j2).find(j, m, m1);
  return c ? *c : AlgebraicNumber();
}

inline double cg_d(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  return cg(j1, m1, j2, m2, j, m).to_double();
}

/// 1-jm Herring-Wigner metric: (-1)^(j+m) delta(m', -m).
inline int one_jm(HalfInt j, HalfInt m, HalfInt mp) {
  if (!valid_projection(j, m) || !valid_projection(j, mp))
    throw std::domain_error("su2::one_jm: projection off the m lattice");
  if (mp != -m) return 0;
  return parity_phase(j + m);
}

/// 3-jm Wigner symbol, (2j3+1)^(-1/2) (-1)^(j3-m3-2j2) (j2 j1 m2 m1 | j3 -m3).
inline AlgebraicNumber three_jm(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                                HalfInt m3) {
  AlgebraicNumber c = cg(j2, m2, j1, m1, j3, -m3);
  if (c.is_zero()) return c;
  int phase = parity_phase(j3 - m3 - j2 - j2);
  AlgebraicNumber scale = AlgebraicNumber::sqrt_rational(Rational(1, j3.dim()));
  return phase < 0 ? -(c * scale) : c * scale;
}

/// Recoupling coefficient (a(bc) j23, j m | (ab) j12, j m): the quadruple-CG
/// sum, evaluated exactly. Independent of m.
inline AlgebraicNumber recoupling_sum_6(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j12,
                                        HalfInt j23, HalfInt j, HalfInt m,
                                        bool reverse_order = false) {
  AlgebraicNumber total;
  auto add_term = [&](HalfInt a, HalfInt b) {
    HalfInt g = m - a - b;  // projection of j3
    if (!valid_projection(j3, g)) return;
    if (!valid_projection(j12, a + b) || !valid_projection(j23, b + g)) return;
    total += cg(j1, a, j2, b, j12, a + b) * cg(j12, a + b, j3, g, j, m) *
             cg(j2, b, j3, g, j23, b + g) * cg(j1, a, j23, b + g, j, m);
  };
  // the two directions exercise different addition orders of the same exact sum
  if (!reverse_order) {
    for (HalfInt a = -j1; a <= j1; a += 1)
      for (HalfInt b = -j2; b <= j2; b += 1) add_term(a, b);
  } else {
    for (HalfInt b = j2; b >= -j2; b -= 1)
      for (HalfInt a = j1; a >= -j1; a -= 1) add_term(a, b);
  }
  return total;
}

/// 6-j symbol {j1 j2 j12; j3 j j23} from the recoupling coefficient with the
/// (-1)^(j1+j2+j3+j) [(2j12+1)(2j23+1)]^(-1/2) prefactor.
inline AlgebraicNumber six_j(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt j3, HalfInt j,
                             HalfInt j23, bool reverse_order = false) {
  if (!triangle(j1, j2, j12) || !triangle(j12, j3, j) || !triangle(j2, j3, j23) ||
      !triangle(j1, j23, j))
    return AlgebraicNumber();
  HalfInt m = j;  // any admissible projection works (Eq-independence checked in tests)
  AlgebraicNumber rec = recoupling_sum_6(j1, j2, j3, j12, j23, j, m, reverse_order);
  AlgebraicNumber scale =
      AlgebraicNumber::sqrt_rational(Rational(1, (long long)j12.dim() * j23.dim()));
  AlgebraicNumber v = rec * scale;
  return parity_phase(j1 + j2 + j3 + j) < 0 ? -v : v;
}

/// Recoupling coefficient ((ac) j13 (bd) j24, j m | (ab) j12 (cd) j34, j m):
/// the six-fold CG sum of the column/row exchange.
inline AlgebraicNumber recoupling_sum_9(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4,
                                        HalfInt j12, HalfInt j34, HalfInt j13, HalfInt j24,
                                        HalfInt j, HalfInt m, bool reverse_order = false) {
  AlgebraicNumber total;
  auto add_term = [&](HalfInt a, HalfInt b, HalfInt g) {
    HalfInt d = m - a - b - g;
    if (!valid_projection(j4, d)) return;
    if (!valid_projection(j12, a + b) || !valid_projection(j34, g + d) ||
        !valid_projection(j13, a + g) || !valid_projection(j24, b + d))
      return;
    total += cg(j1, a, j2, b, j12, a + b) * cg(j3, g, j4, d, j34, g + d) *
             cg(j12, a + b, j34, g + d, j, m) * cg(j1, a, j3, g, j13, a + g) *
             cg(j2, b, j4, d, j24, b + d) * cg(j13, a + g, j24, b + d, j, m);
  };
  if (!reverse_order) {
    for (HalfInt a = -j1; a <= j1; a += 1)
      for (HalfInt b = -j2; b <= j2; b += 1)
        for (HalfInt g = -j3; g <= j3; g += 1) add_term(a, b, g);
  } else {
    for (HalfInt g = j3; g >= -j3; g -= 1)
      for (HalfInt a = j1; a >= -j1; a -= 1)
        for (HalfInt b = j2; b >= -j2; b -= 1) add_term(a, b, g);
  }
  return total;
}

/// 9-j symbol {j1 j2 j12; j3 j4 j34; j13 j24 j}.
inline AlgebraicNumber nine_j(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt j3, HalfInt j4,
                              HalfInt j34, HalfInt j13, HalfInt j24, HalfInt j,
                              bool reverse_order = false) {
  if (!triangle(j1, j2, j12) || !triangle(j3, j4, j34) || !triangle(j12, j34, j) ||
      !triangle(j1, j3, j13) || !triangle(j2, j4, j24) || !triangle(j13, j24, j))
    return AlgebraicNumber();
  HalfInt m = j;
  AlgebraicNumber rec = recoupling_sum_9(j1, j2, j3, j4, j12, j34, j13, j24, j, m, reverse_order);
  long long dd = (long long)j12.dim() * j34.dim() * j13.dim() * j24.dim();
  return rec * AlgebraicNumber::sqrt_rational(Rational(1, dd));
}

/// Optional exact 6-j memo; concurrent inserts of identical keys are benign.
inline AlgebraicNumber six_j_cached(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt j3, HalfInt j,
                                    HalfInt j23) {
  using Key = std::array<int, 6>;
  static std::mutex mu;
  static std::map<Key, AlgebraicNumber> memo;
  Key k{j1.twice(), j2.twice(), j12.twice(), j3.twice(), j.twice(), j23.twice()};
  {
    std::lock_guard lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  AlgebraicNumber v = six_j(j1, j2, j12, j3, j, j23);
  std::lock_guard lock(mu);
  return memo.try_emplace(k, std::move(v)).first->second;
}

/// Wigner-Eckart form Eq-style: (-1)^(j'-m') * 3jm(j' k j; -m' q m) * reduced.
inline AlgebraicNumber wigner_eckart(HalfInt jp, HalfInt mp, HalfInt k, HalfInt q, HalfInt j,
                                     HalfInt m, const AlgebraicNumber& reduced) {
  AlgebraicNumber t = three_jm(jp, k, j, -mp, q, m);
  if (t.is_zero()) return t;
  AlgebraicNumber v = t * reduced;
  return parity_phase(jp - mp) < 0 ? -v : v;
}

inline double wigner_eckart_d(HalfInt jp, HalfInt mp, HalfInt k, HalfInt q, HalfInt j, HalfInt m,
                              double reduced) {
  AlgebraicNumber t = three_jm(jp, k, j, -mp, q, m);
  return (parity_phase(jp - mp) < 0 ? -1.0 : 1.0) * t.to_double() * reduced;
}

/// Exact spin-j generator matrices {Jx, Jy, Jz}, basis ordered m = -j ... +j.
inline std::array<std::vector<std::vector<ExactComplex>>, 3> generator_matrices(HalfInt j) {
  const int n = j.dim();
  auto zero = std::vector<std::vector<ExactComplex>>(n, std::vector<ExactComplex>(n));
  std::array<std::vector<std::vector<ExactComplex>>, 3> out{zero, zero, zero};
  auto m_of = [&](int idx) { return HalfInt::from_twice(-j.twice() + 2 * idx); };
  const Rational half(1, 2);
  for (int a = 0; a < n; ++a) {
    HalfInt m = m_of(a);
    out[2][a][a] = ExactComplex(AlgebraicNumber(Rational(m.twice(), 2)));
    if (a + 1 < n) {
      // <m+1| J+ |m> = sqrt((j-m)(j+m+1))
      long long num = (long long)(j.twice() - m.twice()) * (j.twice() + m.twice() + 2);
      AlgebraicNumber p = AlgebraicNumber::sqrt_rational(Rational(num, 4));
      out[0][a + 1][a] = ExactComplex(p * AlgebraicNumber(half));
      out[0][a][a + 1] = ExactComplex(p * AlgebraicNumber(half));
      out[1][a + 1][a] = ExactComplex(AlgebraicNumber(), -(p * AlgebraicNumber(half)));
      out[1][a][a + 1] = ExactComplex(AlgebraicNumber(), p * AlgebraicNumber(half));
    }
  }
  return out;
}

/// Numeric Wigner little-d matrix d^j(beta), basis ordered m = -j ... +j.
inline Matrix wigner_small_d(HalfInt j, double beta) {
  const int n = j.dim();
  Matrix d(n, n);
  auto fact = [](int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  for (int rp = 0; rp < n; ++rp)
    for (int r = 0; r < n; ++r) {
      // row rp is m' = -j + rp, column r is m = -j + r
      int tmp = -j.twice() + 2 * rp, tm = -j.twice() + 2 * r;
      int jpm = (j.twice() + tm) / 2, jmm = (j.twice() - tm) / 2;
      int jpmp = (j.twice() + tmp) / 2, jmmp = (j.twice() - tmp) / 2;
      double pref = std::sqrt(fact(jpm) * fact(jmm) * fact(jpmp) * fact(jmmp));
      double sum = 0;
      int klo = std::max(0, (tm - tmp) / 2), khi = std::min(jpm, jmmp);
      for (int k = klo; k <= khi; ++k) {
        double denom = fact(jpm - k) * fact(k) * fact(jmmp - k) * fact((tmp - tm) / 2 + k);
        double term = std::pow(c, jpm - k + jmmp - k) * std::pow(s, 2 * k + (tmp - tm) / 2) / denom;
        // sign (-1)^(m'-m+k)
        int sgn = ((k + (tmp - tm) / 2) % 2 + 2) % 2;
        sum += (sgn ? -term : term);
      }
      d(rp, r) = pref * sum;
    }
  return d;
}

/// Full rotation matrix D^j(alpha, beta, gamma) in z-y-z Euler angles.
inline Matrix wigner_D(HalfInt j, double alpha, double beta, double gamma) {
  const int n = j.dim();
  Matrix d = wigner_small_d(j, beta);
  Matrix out(n, n);
  for (int rp = 0; rp < n; ++rp)
    for (int r = 0; r < n; ++r) {
      double mp = (-j.twice() + 2 * rp) / 2.0, m = (-j.twice() + 2 * r) / 2.0;
      out(rp, r) = std::exp(Complex(0, -alpha * mp)) * d(rp, r) * std::exp(Complex(0, -gamma * m));
    }
  return out;
}

/// D^j for a rotation by `angle` about `axis` (need not be normalized),
/// computed from exp(-i angle n.J) by eigendecomposition.
inline Matrix wigner_D_axis_angle(HalfInt j, const Eigen::Vector3d& axis, double angle) {
  Eigen::Vector3d n = axis.normalized();
  auto gen = generator_matrices(j);
  const int dim = j.dim();
  Matrix nj = Matrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      nj(r, c) = n[0] * gen[0][r][c].to_complex() + n[1] * gen[1][r][c].to_complex() +
                 n[2] * gen[2][r][c].to_complex();
  Eigen::SelfAdjointEigenSolver<Matrix> es(nj);
  Matrix phases = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    phases(i, i) = std::exp(Complex(0, -angle * es.eigenvalues()[i]));
  return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

/// Entrywise check of the conjugation relation D*(R)_{mm'} =
/// (-1)^(m-m') D(R)_{-m,-m'} on one sampled rotation.
struct ConjugationReport {
  bool pass = true;
  int row = -1, col = -1;
  double error = 0.0;
};

inline ConjugationReport djm_conjugation_check(HalfInt j, double alpha, double beta, double gamma,
                                               double tol = 1e-12) {
  Matrix D = wigner_D(j, alpha, beta, gamma);
  const int n = j.dim();
  ConjugationReport rep;
  for (int rp = 0; rp < n; ++rp)
    for (int r = 0; r < n; ++r) {
      // index i holds m = -j + i, so -m sits at n-1-i
      int sign = ((rp - r) % 2 == 0) ? 1 : -1;  // (-1)^(m-m')
      Complex lhs = std::conj(D(rp, r));
      Complex rhs = double(sign) * D(n - 1 - rp, n - 1 - r);
      double err = std::abs(lhs - rhs);
      if (err > rep.error) {
        rep.error = err;
        rep.row = rp;
        rep.col = r;
      }
    }
  rep.pass = rep.error <= tol;
  return rep;
}

}  // namespace racah::su2
