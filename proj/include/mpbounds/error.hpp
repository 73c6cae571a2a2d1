#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpbounds {

/// Operand shapes do not line up (non-square input, size mismatch, empty).
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's documented domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A factorization met a pivot below its scale-relative cutoff.
class singular_matrix_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iteration hit its sweep cap. Carries whatever converged before the cap.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, std::vector<std::complex<double>> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const std::vector<std::complex<double>>& partial() const { return partial_; }

 private:
  std::vector<std::complex<double>> partial_;
};

/// Basis data violates the generalized-basis contract.
class invalid_basis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mpbounds
