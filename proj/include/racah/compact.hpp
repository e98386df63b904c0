#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "racah/halfint.hpp"

namespace racah {

/// Analytic irrep handles for the compact groups the calculus needs as chain
/// heads: SU(2), SO(3) and O(3) = SO(3) x Ci.
enum class CompactKind { SU2, SO3, O3Gerade, O3Ungerade };

struct CompactIrrep {
  HalfInt j;
  CompactKind kind = CompactKind::SU2;

  int dim() const { return j.dim(); }

  std::string label() const {
    switch (kind) {
      case CompactKind::SU2:
        return "j=" + j.to_string();
      case CompactKind::SO3:
        return "(" + j.to_string() + ")";
      case CompactKind::O3Gerade:
        return j.to_string() + "g";
      case CompactKind::O3Ungerade:
        return j.to_string() + "u";
    }
    return "?";
  }
};

inline CompactIrrep make_compact_irrep(HalfInt j, CompactKind kind) {
  if (j.is_negative()) throw std::invalid_argument("compact irrep: negative j");
  if ((kind == CompactKind::SO3 || kind == CompactKind::O3Gerade ||
       kind == CompactKind::O3Ungerade) &&
      !j.is_integer())
    throw std::invalid_argument("compact irrep: SO(3)/O(3) labels need integer l");
  return {j, kind};
}

/// Rotation character sin((2j+1)theta/2)/sin(theta/2), evaluated as the
/// equivalent cosine sum so the theta = 0 and theta = 2pi points need no
/// special casing. O(3)-ungerade kinds pick up the parity sign.
inline double compact_character(const CompactIrrep& c, double theta, int parity = +1) {
  double chi = 0;
  for (int twice_m = -c.j.twice(); twice_m <= c.j.twice(); twice_m += 2)
    chi += std::cos(0.5 * twice_m * theta);
  if (c.kind == CompactKind::O3Ungerade && parity < 0) chi = -chi;
  return chi;
}

/// Frobenius-Schur indicator of the spin-j irrep: (-1)^(2j).
inline int frobenius_schur(const CompactIrrep& c) {
  return c.j.is_integer() ? 1 : -1;
}

/// SU(2) tensor multiplicity: 1 iff the triangle rule holds.
inline int tensor_multiplicity(HalfInt ja, HalfInt jb, HalfInt jc) {
  return triangle(ja, jb, jc) ? 1 : 0;
}

}  // namespace racah
