#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "mpbounds/error.hpp"

namespace mpbounds {

using Complex = std::complex<double>;

enum class Norm { One, Inf };

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static ComplexMatrix tridiagonal(std::size_t n, Complex lower, Complex diag, Complex upper) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = diag;
      if (i + 1 < n) {
        m(i + 1, i) = lower;
        m(i, i + 1) = upper;
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool is_square() const { return rows_ == cols_ && rows_ > 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* row(std::size_t i) { return data_.data() + i * cols_; }
  const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
    require_same_shape(rhs, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
    require_same_shape(rhs, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw dimension_error("matrix product: inner sizes differ");
    ComplexMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == 0.0) continue;
        const Complex* brow = b.row(k);
        Complex* crow = c.row(i);
        for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
      }
    }
    return c;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Complex trace() const {
    if (!is_square()) throw dimension_error("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// this + s*I, for square matrices.
  ComplexMatrix& add_scaled_identity(Complex s) {
    if (!is_square()) throw dimension_error("add_scaled_identity: matrix not square");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, i) += s;
    return *this;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void require_same_shape(const ComplexMatrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw dimension_error(std::string(op) + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.empty() || b.empty()) throw dimension_error("kron: empty operand");
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

/// Max absolute column sum.
inline double one_norm(const ComplexMatrix& m) {
  if (m.empty()) throw dimension_error("one_norm: empty matrix");
  std::vector<double> colsum(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Complex* r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) colsum[j] += std::abs(r[j]);
  }
  double best = 0.0;
  for (double s : colsum) best = std::max(best, s);
  return best;
}

/// Max absolute row sum.
inline double inf_norm(const ComplexMatrix& m) {
  if (m.empty()) throw dimension_error("inf_norm: empty matrix");
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Complex* r = m.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(r[j]);
    best = std::max(best, s);
  }
  return best;
}

inline double matrix_norm(const ComplexMatrix& m, Norm norm) {
  return norm == Norm::One ? one_norm(m) : inf_norm(m);
}

inline std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v) {
  if (m.cols() != v.size()) throw dimension_error("matrix*vector: size mismatch");
  std::vector<Complex> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Complex* r = m.row(i);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += r[j] * v[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace mpbounds
