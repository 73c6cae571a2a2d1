#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mpbounds/error.hpp"
#include "mpbounds/matrix.hpp"

namespace mpbounds {

/// Partial-pivoting LU. A pivot counts as singular when its modulus falls at or
/// below 1e-13 times the largest 1-norm among the columns of the input matrix.
class LuFactorization {
 public:
  explicit LuFactorization(ComplexMatrix a) : lu_(std::move(a)) {
    if (!lu_.is_square()) throw dimension_error("LuFactorization: matrix not square");
    const std::size_t n = lu_.rows();
    perm_.resize(n);

    double max_colsum = 0.0;
    {
      std::vector<double> colsum(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) colsum[j] += std::abs(lu_(i, j));
      for (double s : colsum) max_colsum = std::max(max_colsum, s);
    }
    pivot_cutoff_ = 1e-13 * max_colsum;

    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double cand = std::abs(lu_(i, k));
        if (cand > best) {
          best = cand;
          p = i;
        }
      }
      perm_[k] = p;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        parity_ = -parity_;
      }
      if (best <= pivot_cutoff_)
        throw singular_matrix_error("LuFactorization: pivot below cutoff");
      const Complex pivot = lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex mult = lu_(i, k) / pivot;
        lu_(i, k) = mult;
        if (mult == 0.0) continue;
        const Complex* krow = lu_.row(k);
        Complex* irow = lu_.row(i);
        for (std::size_t j = k + 1; j < n; ++j) irow[j] -= mult * krow[j];
      }
    }
  }

  std::size_t size() const { return lu_.rows(); }

  std::vector<Complex> solve(std::vector<Complex> b) const {
    const std::size_t n = size();
    if (b.size() != n) throw dimension_error("LuFactorization::solve: size mismatch");
    for (std::size_t k = 0; k < n; ++k)
      if (perm_[k] != k) std::swap(b[k], b[perm_[k]]);
    for (std::size_t i = 1; i < n; ++i) {
      Complex acc = b[i];
      const Complex* irow = lu_.row(i);
      for (std::size_t j = 0; j < i; ++j) acc -= irow[j] * b[j];
      b[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      Complex acc = b[ii];
      const Complex* irow = lu_.row(ii);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= irow[j] * b[j];
      b[ii] = acc / irow[ii];
    }
    return b;
  }

  /// Solves A X = B column by column.
  ComplexMatrix solve(const ComplexMatrix& b) const {
    const std::size_t n = size();
    if (b.rows() != n) throw dimension_error("LuFactorization::solve: row count mismatch");
    ComplexMatrix x(n, b.cols());
    std::vector<Complex> col(n);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t i = 0; i < n; ++i) col[i] = b(i, j);
      col = solve(std::move(col));
      for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
    }
    return x;
  }

  ComplexMatrix inverse() const { return solve(ComplexMatrix::identity(size())); }

  Complex determinant() const {
    Complex d = static_cast<double>(parity_);
    for (std::size_t i = 0; i < size(); ++i) d *= lu_(i, i);
    return d;
  }

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  int parity_ = 1;
  double pivot_cutoff_ = 0.0;
};

/// Norm of the inverse, from a pivoted factorization and explicit column solves.
inline double inverse_norm(const ComplexMatrix& m, Norm norm) {
  LuFactorization lu(m);
  return matrix_norm(lu.inverse(), norm);
}

}  // namespace mpbounds
