#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace racah {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default absolute tolerance for floating-point validity checks. Catalog
/// matrices are exact or near-exact, so anything looser would mask
/// construction bugs.
inline constexpr double kDefaultTol = 1e-10;

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double unitarity_error(const Matrix& m) {
  return max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols()));
}

inline bool is_unitary(const Matrix& m, double tol = kDefaultTol) {
  return m.rows() == m.cols() && unitarity_error(m) <= tol;
}

/// Rounds to the nearest integer, throwing if the value is not within tol of
/// one. Used for character sums that must be integral by representation
/// theory.
inline long long round_to_integer(double v, double tol, const std::string& what) {
  double r = std::round(v);
  if (std::abs(v - r) > tol)
    throw std::domain_error(what + ": value " + std::to_string(v) + " is not an integer");
  return static_cast<long long>(r);
}

inline long long round_to_integer(Complex v, double tol, const std::string& what) {
  if (std::abs(v.imag()) > tol)
    throw std::domain_error(what + ": value has imaginary part " + std::to_string(v.imag()));
  return round_to_integer(v.real(), tol, what);
}

}  // namespace racah
