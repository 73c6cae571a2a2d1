#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mpbounds/basis.hpp"
#include "mpbounds/error.hpp"
#include "mpbounds/matrix.hpp"
#include "mpbounds/polynomial.hpp"

namespace mpbounds {

/// Coefficients C_0..C_n of a matrix polynomial expressed in a generalized
/// basis: P(z) = sum_j C_j q_j(z).
struct BasisCoefficients {
  std::vector<ComplexMatrix> coefficients;
  GeneralizedBasis basis;

  std::size_t degree() const { return coefficients.size() - 1; }
  std::size_t size() const { return coefficients.front().rows(); }

  ComplexMatrix evaluate(Complex z) const {
    ComplexMatrix acc(size(), size());
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      ComplexMatrix term = coefficients[j];
      term *= basis.evaluate_q(j, z);
      acc += term;
    }
    return acc;
  }
};

BasisCoefficients convert_to_basis(const MatrixPolynomial& p, const GeneralizedBasis& basis);

/// Monic quadratic I z^2 + A1 z + A0 rewritten in a degree-2 basis, via the
/// closed forms: Newton (a, b) gives C1 = A1 + (a+b) I, C0 = a A1 + A0 + a^2 I;
/// the family {1, z-a, (z-b)(z-c)} gives C1 = A1 + (b+c) I and
/// C0 = a A1 + A0 + (a(b+c) - bc) I.
inline BasisCoefficients convert_quadratic(const ComplexMatrix& a1, const ComplexMatrix& a0,
                                           const GeneralizedBasis& basis) {
  if (!a1.is_square() || !a0.is_square() || a1.rows() != a0.rows())
    throw dimension_error("convert_quadratic: A1, A0 must be square of equal size");
  if (basis.degree() != 2) throw dimension_error("convert_quadratic: basis degree must be 2");
  const std::size_t m = a1.rows();
  const ComplexMatrix eye = ComplexMatrix::identity(m);

  switch (basis.kind()) {
    case BasisKind::Power:
      return {{a0, a1, eye}, basis};
    case BasisKind::Newton: {
      const Complex a = basis.nodes()[0];
      const Complex b = basis.nodes()[1];
      ComplexMatrix c1 = a1;
      c1.add_scaled_identity(a + b);
      ComplexMatrix c0 = a * a1;
      c0 += a0;
      c0.add_scaled_identity(a * a);
      return {{std::move(c0), std::move(c1), eye}, basis};
    }
    case BasisKind::QuadraticGeneral: {
      const Complex a = basis.node_a(), b = basis.node_b(), c = basis.node_c();
      ComplexMatrix c1 = a1;
      c1.add_scaled_identity(b + c);
      ComplexMatrix c0 = a * a1;
      c0 += a0;
      c0.add_scaled_identity(a * (b + c) - b * c);
      return {{std::move(c0), std::move(c1), eye}, basis};
    }
    case BasisKind::Generic:
      break;
  }
  return convert_to_basis(MatrixPolynomial({a0, a1, eye}), basis);
}

/// Change of basis by back substitution on degrees n..0: each q_j is monic, so
/// C_j is the current z^j coefficient, whose expansion is then subtracted from
/// the remainder.
inline BasisCoefficients convert_to_basis(const MatrixPolynomial& p,
                                          const GeneralizedBasis& basis) {
  if (!p.in_power_basis()) throw precondition_error("convert_to_basis: power-basis input required");
  if (basis.degree() != p.degree())
    throw dimension_error("convert_to_basis: basis degree != polynomial degree");
  const std::size_t n = p.degree();

  std::vector<ComplexMatrix> rem = p.coefficients();
  std::vector<ComplexMatrix> out(n + 1, ComplexMatrix());
  for (std::size_t j = n; j > 0; --j) {
    out[j] = rem[j];
    const std::vector<Complex> q = poly_from_roots(basis.zeros_of(j));
    for (std::size_t k = 0; k < j; ++k) {
      if (q[k] == 0.0) continue;
      ComplexMatrix t = out[j];
      t *= q[k];
      rem[k] -= t;
    }
  }
  out[0] = rem[0];
  return {std::move(out), basis};
}

/// Exact re-expansion back to powers of z.
inline MatrixPolynomial to_power_basis(const BasisCoefficients& c) {
  const std::size_t n = c.degree();
  const std::size_t m = c.size();
  std::vector<ComplexMatrix> acc(n + 1, ComplexMatrix(m, m));
  acc[0] = c.coefficients[0];
  for (std::size_t j = 1; j <= n; ++j) {
    const std::vector<Complex> q = poly_from_roots(c.basis.zeros_of(j));
    for (std::size_t k = 0; k <= j; ++k) {
      if (q[k] == 0.0) continue;
      ComplexMatrix t = c.coefficients[j];
      t *= q[k];
      acc[k] += t;
    }
  }
  return MatrixPolynomial(std::move(acc));
}

}  // namespace mpbounds
