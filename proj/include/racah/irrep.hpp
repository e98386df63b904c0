#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racah/group.hpp"
#include "racah/numeric.hpp"

namespace racah {

/// A unitary matrix irrep of a finite group: one matrix per group element.
/// `parity` is +-1 for irreps of G x Ci products (g/u types), 0 otherwise.
struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<Matrix> matrices;
  int parity = 0;

  const Matrix& operator()(int g) const { return matrices[g]; }
  Complex character(int g) const { return matrices[g].trace(); }
};

/// Outcome of verify_irrep: either ok, or the first failed property with the
/// offending element pair and error magnitude.
struct IrrepCheck {
  bool ok = true;
  std::string property;  // "size" | "homomorphism" | "unitarity" | "irreducibility"
  int elem_r = -1, elem_s = -1;
  double error = 0.0;

  std::string describe() const {
    if (ok) return "ok";
    std::string s = property + " failed";
    if (elem_r >= 0) s += " at element " + std::to_string(elem_r);
    if (elem_s >= 0) s += "," + std::to_string(elem_s);
    return s + " (error " + std::to_string(error) + ")";
  }
};

/// Checks homomorphism, unitarity and irreducibility of candidate matrices.
inline IrrepCheck verify_irrep(const FiniteGroup& g, const std::vector<Matrix>& matrices,
                               double tol = kDefaultTol) {
  IrrepCheck out;
  if (static_cast<int>(matrices.size()) != g.order)
    return {false, "size", -1, -1, 0.0};
  const auto dim = matrices[0].rows();
  for (int e = 0; e < g.order; ++e)
    if (matrices[e].rows() != dim || matrices[e].cols() != dim)
      return {false, "size", e, -1, 0.0};
  for (int e = 0; e < g.order; ++e) {
    double err = unitarity_error(matrices[e]);
    if (err > tol) return {false, "unitarity", e, -1, err};
  }
  for (int r = 0; r < g.order; ++r)
    for (int s = 0; s < g.order; ++s) {
      double err = max_abs(matrices[r] * matrices[s] - matrices[g.mul[r][s]]);
      if (err > tol) return {false, "homomorphism", r, s, err};
    }
  double norm = 0;
  for (int e = 0; e < g.order; ++e) norm += std::norm(matrices[e].trace());
  if (std::abs(norm - g.order) > tol * g.order)
    return {false, "irreducibility", -1, -1, std::abs(norm - g.order)};
  return out;
}

/// Character table: one row per irrep, one column per conjugacy class.
struct CharacterTable {
  std::vector<std::string> labels;
  std::vector<int> class_sizes;
  std::vector<std::vector<Complex>> rows;  // rows[irrep][class]

  Complex at(int irrep, int cls) const { return rows[irrep][cls]; }
};

/// A finite group together with its catalog of irreps; the unit every
/// coupling computation works over.
struct SymmetryGroup {
  FiniteGroup group;
  std::vector<Irrep> irreps;

  int order() const { return group.order; }

  int irrep_index(const std::string& label) const {
    for (size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("group " + group.name + ": unknown irrep '" + label + "'");
  }
  const Irrep& irrep(const std::string& label) const { return irreps[irrep_index(label)]; }
  const Irrep& irrep(int i) const { return irreps[i]; }
  int num_irreps() const { return static_cast<int>(irreps.size()); }

  std::vector<std::string> irrep_labels() const {
    std::vector<std::string> out;
    for (const auto& ir : irreps) out.push_back(ir.label);
    return out;
  }

  /// Index of the identity IRC (all characters 1).
  int identity_irrep() const {
    for (size_t i = 0; i < irreps.size(); ++i) {
      if (irreps[i].dim != 1) continue;
      bool trivial = true;
      for (int e = 0; e < group.order && trivial; ++e)
        trivial = std::abs(irreps[i].matrices[e](0, 0) - 1.0) < 1e-8;
      if (trivial) return static_cast<int>(i);
    }
    throw std::logic_error("group " + group.name + ": identity irrep not in catalog");
  }

  /// Index of the complex-conjugate irrep class of irrep a.
  int conjugate_irrep(int a) const {
    const Irrep& ir = irreps[a];
    for (int b = 0; b < num_irreps(); ++b) {
      if (irreps[b].dim != ir.dim) continue;
      double err = 0;
      for (int c = 0; c < group.num_classes(); ++c) {
        int e = group.classes[c][0];
        err = std::max(err, std::abs(std::conj(ir.character(e)) - irreps[b].character(e)));
      }
      if (err < 1e-8) return b;
    }
    throw std::logic_error("group " + group.name + ": conjugate of irrep " + ir.label +
                           " not in catalog");
  }

  CharacterTable character_table() const {
    CharacterTable t;
    for (const auto& ir : irreps) t.labels.push_back(ir.label);
    for (const auto& cls : group.classes) t.class_sizes.push_back(static_cast<int>(cls.size()));
    for (const auto& ir : irreps) {
      std::vector<Complex> row;
      for (const auto& cls : group.classes) row.push_back(ir.character(cls[0]));
      t.rows.push_back(std::move(row));
    }
    return t;
  }
};

/// Frobenius-Schur indicator |G|^-1 sum_R chi(R^2): 1 orthogonal, -1
/// symplectic, 0 complex.
inline int frobenius_schur(const SymmetryGroup& sg, int a, double tol = kDefaultTol) {
  Complex sum = 0;
  for (int e = 0; e < sg.order(); ++e)
    sum += sg.irreps[a].character(sg.group.mul[e][e]);
  long long v = round_to_integer(sum / double(sg.order()), tol, "frobenius_schur(" +
                                 sg.irreps[a].label + ")");
  if (v < -1 || v > 1)
    throw std::domain_error("frobenius_schur: indicator " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

/// sigma(c | a (x) b) by the character formula.
inline int tensor_multiplicity(const SymmetryGroup& sg, int a, int b, int c,
                               double tol = kDefaultTol) {
  Complex sum = 0;
  for (int e = 0; e < sg.order(); ++e)
    sum += std::conj(sg.irreps[c].character(e)) * sg.irreps[a].character(e) *
           sg.irreps[b].character(e);
  long long v = round_to_integer(sum / double(sg.order()), tol, "tensor_multiplicity");
  if (v < 0) throw std::domain_error("tensor_multiplicity: negative multiplicity");
  return static_cast<int>(v);
}

/// Multiplicity of irrep a in an arbitrary character (one value per element).
inline int multiplicity_in(const SymmetryGroup& sg, int a, const std::vector<Complex>& chi,
                           double tol = kDefaultTol) {
  Complex sum = 0;
  for (int e = 0; e < sg.order(); ++e)
    sum += std::conj(sg.irreps[a].character(e)) * chi[e];
  long long v = round_to_integer(sum / double(sg.order()), tol, "multiplicity_in");
  if (v < 0) throw std::domain_error("multiplicity_in: negative multiplicity");
  return static_cast<int>(v);
}

}  // namespace racah
