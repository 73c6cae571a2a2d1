#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mpbounds/basis.hpp"
#include "mpbounds/error.hpp"
#include "mpbounds/lu.hpp"
#include "mpbounds/matrix.hpp"

namespace mpbounds {

/// P(z) = sum_j A_j q_j(z) with square m x m coefficients A_0..A_n, n >= 1.
/// The basis defaults to powers of z.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(std::vector<ComplexMatrix> coefficients)
      : MatrixPolynomial(std::move(coefficients), GeneralizedBasis::power(1), true) {}

  MatrixPolynomial(std::vector<ComplexMatrix> coefficients, GeneralizedBasis basis)
      : MatrixPolynomial(std::move(coefficients), std::move(basis), false) {}

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.front().rows(); }

  const std::vector<ComplexMatrix>& coefficients() const { return coeffs_; }
  const ComplexMatrix& coefficient(std::size_t j) const { return coeffs_.at(j); }
  const ComplexMatrix& leading() const { return coeffs_.back(); }
  const GeneralizedBasis& basis() const { return basis_; }
  bool in_power_basis() const { return basis_.kind() == BasisKind::Power; }

  bool is_monic() const { return coeffs_.back() == ComplexMatrix::identity(size()); }

  ComplexMatrix evaluate(Complex z) const {
    ComplexMatrix acc(size(), size());
    if (in_power_basis()) {
      // Horner.
      acc = coeffs_.back();
      for (std::size_t j = coeffs_.size() - 1; j-- > 0;) {
        acc *= z;
        acc += coeffs_[j];
      }
      return acc;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      ComplexMatrix term = coeffs_[j];
      term *= basis_.evaluate_q(j, z);
      acc += term;
    }
    return acc;
  }

  /// z^n P(1/z): coefficient j becomes A_{n-j}. Power basis only.
  MatrixPolynomial reverse() const {
    if (!in_power_basis()) throw precondition_error("reverse: power basis required");
    std::vector<ComplexMatrix> rev(coeffs_.rbegin(), coeffs_.rend());
    return MatrixPolynomial(std::move(rev));
  }

 private:
  MatrixPolynomial(std::vector<ComplexMatrix> coefficients, GeneralizedBasis basis,
                   bool default_basis)
      : coeffs_(std::move(coefficients)), basis_(std::move(basis)) {
    if (coeffs_.size() < 2)
      throw dimension_error("MatrixPolynomial: needs degree >= 1 (two coefficients)");
    const std::size_t m = coeffs_.front().rows();
    for (const auto& c : coeffs_)
      if (!c.is_square() || c.rows() != m)
        throw dimension_error("MatrixPolynomial: coefficients must be square, equal size");
    if (default_basis) basis_ = GeneralizedBasis::power(degree());
    if (basis_.degree() != degree())
      throw dimension_error("MatrixPolynomial: basis degree != polynomial degree");
  }

  std::vector<ComplexMatrix> coeffs_;
  GeneralizedBasis basis_;
};

/// Left-multiplies every coefficient by the inverse of the leading one.
/// Throws singular_matrix_error when that inverse does not exist.
inline MatrixPolynomial monicize(const MatrixPolynomial& p) {
  if (!p.in_power_basis()) throw precondition_error("monicize: power basis required");
  LuFactorization lu(p.leading());
  std::vector<ComplexMatrix> out;
  out.reserve(p.degree() + 1);
  for (std::size_t j = 0; j < p.degree(); ++j) out.push_back(lu.solve(p.coefficient(j)));
  out.push_back(ComplexMatrix::identity(p.size()));
  return MatrixPolynomial(std::move(out));
}

}  // namespace mpbounds
