#pragma once

#include <cstddef>
#include <vector>

#include "mpbounds/eig.hpp"
#include "mpbounds/error.hpp"
#include "mpbounds/matrix.hpp"
#include "mpbounds/polynomial.hpp"

namespace mpbounds {

/// First-block-row companion of a monic power-basis polynomial: the top block
/// row is (-B_{n-1}, ..., -B_0), identities sit on the first block
/// subdiagonal, size n*m x n*m.
inline ComplexMatrix block_companion(const MatrixPolynomial& p) {
  if (!p.in_power_basis()) throw precondition_error("block_companion: power basis required");
  if (!p.is_monic()) throw precondition_error("block_companion: monic polynomial required");
  const std::size_t n = p.degree();
  const std::size_t m = p.size();
  ComplexMatrix c(n * m, n * m);
  for (std::size_t blk = 0; blk < n; ++blk) {
    const ComplexMatrix& b = p.coefficient(n - 1 - blk);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) c(i, blk * m + j) = -b(i, j);
  }
  for (std::size_t i = m; i < n * m; ++i) c(i, i - m) = 1.0;
  return c;
}

/// Eigenvalues of P as the spectrum of the companion of the monicized
/// polynomial. Requires a nonsingular leading coefficient; returns all n*m
/// finite eigenvalues.
inline Spectrum polyeig_oracle(const MatrixPolynomial& p) {
  return dense_eigenvalues(block_companion(monicize(p)));
}

}  // namespace mpbounds
