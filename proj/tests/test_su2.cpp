#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "racah/su2.hpp"

using namespace racah;
using su2::cg;
using su2::nine_j;
using su2::one_jm;
using su2::six_j;
using su2::three_jm;

namespace {
const HalfInt h(int twice) { return HalfInt::from_twice(twice); }

std::vector<HalfInt> projections(HalfInt j) {
  std::vector<HalfInt> out;
  for (HalfInt m = -j; m <= j; m += 1) out.push_back(m);
  return out;
}
}  // namespace

TEST_CASE("cg matches pinned values") {
  CHECK(cg(h(1), h(1), h(1), h(1), h(2), h(2)) == AlgebraicNumber(1));
  CHECK(cg(h(1), h(1), h(1), h(-1), h(0), h(0)) == AlgebraicNumber::sqrt_rational(Rational(1, 2)));
  CHECK(cg(h(1), h(-1), h(1), h(1), h(0), h(0)) ==
        -AlgebraicNumber::sqrt_rational(Rational(1, 2)));
  for (HalfInt j : {h(0), h(1), h(2), h(5)})
    for (HalfInt m : projections(j)) CHECK(cg(j, m, h(0), h(0), j, m) == AlgebraicNumber(1));
  // off-triangle and mismatched m give exact zero
  CHECK(cg(h(1), h(1), h(1), h(1), h(4), h(2)).is_zero());
  CHECK(cg(h(1), h(1), h(1), h(-1), h(2), h(2)).is_zero());
  // m off the lattice of j is a domain error
  CHECK_THROWS_AS(cg(h(1), h(0), h(2), h(2), h(3), h(2)), std::domain_error);
}

TEST_CASE("ladder recursion agrees with the closed-form oracle") {
  for (int tj1 = 0; tj1 <= 4; ++tj1)
    for (int tj2 = 0; tj2 <= 4; ++tj2)
      for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
        for (HalfInt m1 : projections(h(tj1)))
          for (HalfInt m2 : projections(h(tj2))) {
            HalfInt j1 = h(tj1), j2 = h(tj2), j = h(tj);
            HalfInt m = m1 + m2;
            if (!valid_projection(j, m)) continue;
            CHECK(cg(j1, m1, j2, m2, j, m) == oracles::cg_closed_form(j1, m1, j2, m2, j, m));
          }
}

TEST_CASE("cg orthonormality is exact") {
  for (int tj1 = 0; tj1 <= 3; ++tj1)
    for (int tj2 = 0; tj2 <= 3; ++tj2) {
      HalfInt j1 = h(tj1), j2 = h(tj2);
      // rows: fixed (j m), (j' m')
      for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
        for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2)
          for (HalfInt m : projections(h(tj)))
            for (HalfInt mp : projections(h(tjp))) {
              AlgebraicNumber sum;
              for (HalfInt m1 : projections(j1))
                for (HalfInt m2 : projections(j2))
                  sum += cg(j1, m1, j2, m2, h(tj), m) * cg(j1, m1, j2, m2, h(tjp), mp);
              bool diag = tj == tjp && m == mp;
              CHECK(sum == AlgebraicNumber(diag ? 1 : 0));
            }
      // columns: fixed (m1 m2), (m1' m2')
      for (HalfInt m1 : projections(j1))
        for (HalfInt m2 : projections(j2))
          for (HalfInt m1p : projections(j1))
            for (HalfInt m2p : projections(j2)) {
              AlgebraicNumber sum;
              for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
                HalfInt m = m1 + m2;
                if (!valid_projection(h(tj), m) || m1p + m2p != m) continue;
                sum += cg(j1, m1, j2, m2, h(tj), m) * cg(j1, m1p, j2, m2p, h(tj), m);
              }
              bool diag = m1 == m1p && m2 == m2p;
              CHECK(sum == AlgebraicNumber(diag ? 1 : 0));
            }
    }
}

TEST_CASE("one_jm metric") {
  CHECK(one_jm(h(0), h(0), h(0)) == 1);
  CHECK(one_jm(h(1), h(1), h(-1)) == -1);
  CHECK(one_jm(h(2), h(2), h(2)) == 0);
  CHECK(one_jm(h(3), h(1), h(-1)) == 1);  // (-1)^(3/2+1/2)
}

TEST_CASE("three_jm pinned values") {
  CHECK(three_jm(h(2), h(2), h(2), h(0), h(0), h(0)).is_zero());
  // (j j 0; m -m 0) = (-1)^(j-m)/sqrt(2j+1)
  for (int tj = 0; tj <= 5; ++tj)
    for (HalfInt m : projections(h(tj))) {
      AlgebraicNumber expect = AlgebraicNumber::sqrt_rational(Rational(1, tj + 1));
      if (parity_phase(h(tj) - m) < 0) expect = -expect;
      CHECK(three_jm(h(tj), h(tj), h(0), m, -m, h(0)) == expect);
    }
  AlgebraicNumber v = three_jm(h(1), h(1), h(2), h(1), h(1), h(-2));
  CHECK(v * v == AlgebraicNumber(Rational(1, 3)));
  CHECK(v.sign() == -1);  // Condon-Shortley puts the stretched 3-jm at -1/sqrt(3)
}

TEST_CASE("three_jm permutation and reflection phases are exact") {
  auto all_j = {h(0), h(1), h(2), h(3), h(4), h(5)};
  for (HalfInt j1 : all_j)
    for (HalfInt j2 : all_j)
      for (HalfInt j3 : all_j) {
        if (!triangle(j1, j2, j3)) continue;
        int phase = parity_phase(j1 + j2 + j3);
        for (HalfInt m1 : projections(j1))
          for (HalfInt m2 : projections(j2)) {
            HalfInt m3 = -(m1 + m2);
            if (!valid_projection(j3, m3)) continue;
            AlgebraicNumber base = three_jm(j1, j2, j3, m1, m2, m3);
            AlgebraicNumber cyc = three_jm(j2, j3, j1, m2, m3, m1);
            AlgebraicNumber swap = three_jm(j2, j1, j3, m2, m1, m3);
            AlgebraicNumber refl = three_jm(j1, j2, j3, -m1, -m2, -m3);
            CHECK(cyc == base);
            CHECK(swap == (phase < 0 ? -base : base));
            CHECK(refl == (phase < 0 ? -base : base));
          }
      }
}

TEST_CASE("six_j special values and m-independence") {
  // {j1 j2 j3; 0 j3 j2} = (-1)^(j1+j2+j3) / sqrt((2j2+1)(2j3+1))
  for (int tj1 = 0; tj1 <= 4; ++tj1)
    for (int tj2 = 0; tj2 <= 4; ++tj2)
      for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
        HalfInt j1 = h(tj1), j2 = h(tj2), j3 = h(tj3);
        AlgebraicNumber expect =
            AlgebraicNumber::sqrt_rational(Rational(1, (long long)j2.dim() * j3.dim()));
        if (parity_phase(j1 + j2 + j3) < 0) expect = -expect;
        CHECK(six_j(j1, j2, j3, h(0), j3, j2) == expect);
      }
  // the recoupling sum behind the 6-j must not depend on the projection
  HalfInt j1 = h(2), j2 = h(3), j3 = h(2), j12 = h(3), j23 = h(3), j = h(1);
  AlgebraicNumber first = su2::recoupling_sum_6(j1, j2, j3, j12, j23, j, h(1));
  for (HalfInt m : projections(j))
    CHECK(su2::recoupling_sum_6(j1, j2, j3, j12, j23, j, m) == first);
}

TEST_CASE("six_j two summation orders agree exactly") {
  HalfInt half = h(1), one = h(2);
  AlgebraicNumber a = six_j(half, half, one, half, half, one, false);
  AlgebraicNumber b = six_j(half, half, one, half, half, one, true);
  CHECK(a == b);
  CHECK(a == AlgebraicNumber(Rational(1, 6)));
  for (int t1 = 0; t1 <= 3; ++t1)
    for (int t2 = 0; t2 <= 3; ++t2)
      for (int t12 = std::abs(t1 - t2); t12 <= t1 + t2; t12 += 2)
        for (int t3 = 0; t3 <= 3; ++t3)
          for (int tj = 0; tj <= 6; ++tj)
            for (int t23 = std::abs(t2 - t3); t23 <= t2 + t3; t23 += 2) {
              AlgebraicNumber x = six_j(h(t1), h(t2), h(t12), h(t3), h(tj), h(t23), false);
              AlgebraicNumber y = six_j(h(t1), h(t2), h(t12), h(t3), h(tj), h(t23), true);
              CHECK(x == y);
            }
}

TEST_CASE("six_j symmetries hold against the definitional sum") {
  auto js = {h(0), h(1), h(2), h(3), h(4)};
  for (HalfInt a : js)
    for (HalfInt b : js)
      for (HalfInt c : js)
        for (HalfInt d : js)
          for (HalfInt e : js)
            for (HalfInt f : js) {
              AlgebraicNumber base = six_j(a, b, c, d, e, f);
              // column permutation
              CHECK(six_j(b, a, c, e, d, f) == base);
              CHECK(six_j(c, b, a, f, e, d) == base);
              // swap upper/lower in two columns
              CHECK(six_j(d, e, c, a, b, f) == base);
            }
}

TEST_CASE("six_j orthogonality sums") {
  // sum rules over the intermediate label: plain sum gives 1, alternating 0
  AlgebraicNumber plain, alternating;
  for (int x = 0; x <= 2; ++x) {
    AlgebraicNumber t = six_j(h(2), h(2), h(2 * x), h(2), h(2), h(2 * x));
    t = t * AlgebraicNumber(2 * x + 1);
    plain += t;
    alternating += (x % 2 ? -t : t);
  }
  CHECK(plain == AlgebraicNumber(1));
  CHECK(alternating.is_zero());
  // unitarity of the recoupling matrix: sum_x (2x+1)(2f+1) {a b x; c d f}^2 = 1
  AlgebraicNumber unit;
  for (int x = 0; x <= 2; ++x) {
    AlgebraicNumber t = six_j(h(2), h(2), h(2 * x), h(2), h(2), h(2));
    unit += t * t * AlgebraicNumber(2 * x + 1) * AlgebraicNumber(3);
  }
  CHECK(unit == AlgebraicNumber(1));
}

TEST_CASE("nine_j basics") {
  CHECK(nine_j(h(0), h(0), h(0), h(0), h(0), h(0), h(0), h(0), h(0)) == AlgebraicNumber(1));
  // zero lower-right entry reduces to a 6-j
  auto js = {h(1), h(2)};
  for (HalfInt a : js)
    for (HalfInt b : js)
      for (HalfInt c : {h(1), h(2), h(3)}) {
        if (!triangle(a, b, c)) continue;
        for (HalfInt d : js)
          for (HalfInt e : js) {
            if (!triangle(d, e, c)) continue;
            for (HalfInt g : {h(0), h(1), h(2), h(3)}) {
              if (!triangle(a, d, g) || !triangle(b, e, g)) continue;
              AlgebraicNumber lhs = nine_j(a, b, c, d, e, c, g, g, h(0));
              AlgebraicNumber rhs = six_j(a, b, c, e, d, g);
              Rational scale(1, (long long)c.dim() * g.dim());
              rhs = rhs * AlgebraicNumber::sqrt_rational(scale);
              if (parity_phase(b + c + d + g) < 0) rhs = -rhs;
              CHECK(lhs == rhs);
            }
          }
      }
  // two summation orders agree
  AlgebraicNumber x = nine_j(h(2), h(2), h(2), h(2), h(2), h(2), h(2), h(2), h(2), false);
  AlgebraicNumber y = nine_j(h(2), h(2), h(2), h(2), h(2), h(2), h(2), h(2), h(2), true);
  CHECK(x == y);
  // projection independence of the defining sum
  AlgebraicNumber first =
      su2::recoupling_sum_9(h(1), h(1), h(1), h(1), h(2), h(2), h(2), h(2), h(2), h(2));
  for (HalfInt m : projections(h(2)))
    CHECK(su2::recoupling_sum_9(h(1), h(1), h(1), h(1), h(2), h(2), h(2), h(2), h(2), m) == first);
}

TEST_CASE("wigner_eckart selection rules and scalar case") {
  // k=0: matrix element = delta(j'j) delta(m'm) reduced / sqrt(2j+1)
  for (int tj = 0; tj <= 3; ++tj)
    for (HalfInt m : projections(h(tj))) {
      AlgebraicNumber red(7);
      AlgebraicNumber got = su2::wigner_eckart(h(tj), m, h(0), h(0), h(tj), m, red);
      CHECK(got == AlgebraicNumber(7) * AlgebraicNumber::sqrt_rational(Rational(1, tj + 1)));
    }
  CHECK(su2::wigner_eckart(h(1), h(1), h(2), h(2), h(1), h(1), AlgebraicNumber(1)).is_zero());
  CHECK(su2::wigner_eckart(h(5), h(1), h(2), h(0), h(1), h(1), AlgebraicNumber(1)).is_zero());
}

TEST_CASE("wigner matrices: conjugation relation") {
  CHECK(su2::djm_conjugation_check(h(1), 0, 0, 0).pass);
  CHECK(su2::djm_conjugation_check(h(1), 0, M_PI, 0).pass);
  CHECK(su2::djm_conjugation_check(h(2), 0.7, 1.3, -2.1).pass);
  CHECK(su2::djm_conjugation_check(h(3), 2.2, 0.4, 1.9).pass);
  CHECK(su2::djm_conjugation_check(h(4), -0.3, 2.8, 0.05).pass);
}

TEST_CASE("wigner matrices: euler formula matches axis-angle exponential") {
  for (int tj : {1, 2, 3}) {
    HalfInt j = h(tj);
    Matrix viaEuler = su2::wigner_D(j, 0, 1.1, 0);
    Matrix viaExp = su2::wigner_D_axis_angle(j, Eigen::Vector3d(0, 1, 0), 1.1);
    CHECK(max_abs(viaEuler - viaExp) < 1e-12);
    Matrix z = su2::wigner_D(j, 0.8, 0, 0);
    Matrix zExp = su2::wigner_D_axis_angle(j, Eigen::Vector3d(0, 0, 1), 0.8);
    CHECK(max_abs(z - zExp) < 1e-12);
    // homomorphism under composition of the two rotations
    Matrix prod = su2::wigner_D(j, 0.8, 1.1, 0);
    CHECK(max_abs(z * viaEuler - prod) < 1e-12);
  }
}

TEST_CASE("exact generators satisfy the angular momentum algebra") {
  for (int tj : {1, 2, 3}) {
    auto gen = su2::generator_matrices(h(tj));
    const int n = tj + 1;
    auto mat_mul = [&](const auto& A, const auto& B) {
      std::vector<std::vector<ExactComplex>> C(n, std::vector<ExactComplex>(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          for (int k = 0; k < n; ++k) C[r][c] += A[r][k] * B[k][c];
      return C;
    };
    for (int a = 0; a < 3; ++a) {
      int b = (a + 1) % 3, c = (a + 2) % 3;
      auto ab = mat_mul(gen[a], gen[b]);
      auto ba = mat_mul(gen[b], gen[a]);
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
          ExactComplex lhs = ab[r][col] - ba[r][col];
          ExactComplex rhs = ExactComplex::i() * gen[c][r][col];
          CHECK(lhs == rhs);
        }
    }
  }
}
