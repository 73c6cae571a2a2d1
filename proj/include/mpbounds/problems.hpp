#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "mpbounds/error.hpp"
#include "mpbounds/lu.hpp"
#include "mpbounds/matrix.hpp"
#include "mpbounds/polynomial.hpp"

namespace mpbounds {

/// Damped mass-spring chain: I z^2 + tau*D z + kappa*D with
/// D = tridiag(-1, 3, -1), size m >= 2.
inline MatrixPolynomial mass_spring(std::size_t m, double tau, double kappa) {
  if (m < 2) throw dimension_error("mass_spring: m must be >= 2");
  const ComplexMatrix d = ComplexMatrix::tridiagonal(m, -1.0, 3.0, -1.0);
  ComplexMatrix a1 = d;
  a1 *= tau;
  ComplexMatrix a0 = d;
  a0 *= kappa;
  return MatrixPolynomial({std::move(a0), std::move(a1), ComplexMatrix::identity(m)});
}

/// Basis nodes picked for a problem, with the criterion values that decided
/// the Newton choice (chosen first).
struct NodeSelection {
  std::pair<Complex, Complex> newton_nodes;
  std::optional<std::array<Complex, 3>> general_nodes;  // (a, b, c), when defined
  double chosen_criterion = 0.0;
  double rejected_criterion = 0.0;
};

namespace detail {

/// Roots of z^2 + p z + q, complex coefficients; smaller-cancellation form.
inline std::pair<Complex, Complex> monic_quadratic_roots(Complex p, Complex q) {
  const Complex half_p = 0.5 * p;
  Complex s = std::sqrt(half_p * half_p - q);
  // Pick the sign that avoids cancellation in -p/2 - s.
  if (std::abs(-half_p - s) < std::abs(-half_p + s)) s = -s;
  const Complex r1 = -half_p - s;
  if (r1 == 0.0) return {r1, -half_p + s};
  return {r1, q / r1};
}

/// Tie order: nonnegative imaginary part first, then smaller real part.
inline bool tie_prefer(Complex a, Complex b) {
  const bool a_up = a.imag() >= 0.0, b_up = b.imag() >= 0.0;
  if (a_up != b_up) return a_up;
  return a.real() < b.real();
}

/// Whether r2 should be the chosen root. Conjugate pairs give equal criteria
/// only up to rounding, so near-ties fall back to the deterministic order.
inline bool prefer_second(Complex r1, Complex r2, double c1, double c2) {
  if (std::abs(c1 - c2) <= 1e-12 * std::max(c1, c2)) return tie_prefer(r2, r1);
  return c2 < c1;
}

}  // namespace detail

/// Newton and quadratic-family nodes for the mass-spring problem. Both come
/// from the roots r1, r2 of a^2 + 3*tau*a + 3*kappa = 0: the Newton pair is
/// both roots with the smaller |a*tau + kappa| first, and the family is
/// (-kappa/tau, r1, r2), undefined when tau = 0.
inline NodeSelection mass_spring_nodes(double tau, double kappa) {
  auto [r1, r2] = detail::monic_quadratic_roots(Complex(3.0 * tau), Complex(3.0 * kappa));
  const double c1 = std::abs(r1 * tau + kappa);
  const double c2 = std::abs(r2 * tau + kappa);
  Complex chosen = r1, rejected = r2;
  double cc = c1, cr = c2;
  if (detail::prefer_second(r1, r2, c1, c2)) {
    std::swap(chosen, rejected);
    std::swap(cc, cr);
  }
  NodeSelection sel;
  sel.newton_nodes = {chosen, rejected};
  sel.chosen_criterion = cc;
  sel.rejected_criterion = cr;
  if (tau != 0.0) sel.general_nodes = {Complex(-kappa / tau), chosen, rejected};
  return sel;
}

/// Componentwise midpoint of the bounding box: (min Re + max Re)/2 plus
/// i*(min Im + max Im)/2.
inline Complex midpoint_minimax(const std::vector<Complex>& values) {
  if (values.empty()) throw precondition_error("midpoint_minimax: empty input");
  double re_lo = values[0].real(), re_hi = re_lo;
  double im_lo = values[0].imag(), im_hi = im_lo;
  for (const Complex& v : values) {
    re_lo = std::min(re_lo, v.real());
    re_hi = std::max(re_hi, v.real());
    im_lo = std::min(im_lo, v.imag());
    im_hi = std::max(im_hi, v.imag());
  }
  return {0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi)};
}

/// Newton nodes for a monic quadratic I z^2 + B1 z + B0: mu_j is the midpoint
/// of the diagonal of B_j, a is the root of a^2 + mu_1 a + mu_0 with the
/// smaller ||a B1 + B0 + a^2 I||, and b = -mu_1 - a. Conjugate-root ties go to
/// the nonnegative imaginary part, then the smaller real part.
inline NodeSelection general_nodes(const ComplexMatrix& b1, const ComplexMatrix& b0,
                                   Norm norm = Norm::One) {
  if (!b1.is_square() || !b0.is_square() || b1.rows() != b0.rows())
    throw dimension_error("general_nodes: B1, B0 must be square of equal size");
  const std::size_t m = b1.rows();
  std::vector<Complex> d1(m), d0(m);
  for (std::size_t i = 0; i < m; ++i) {
    d1[i] = b1(i, i);
    d0[i] = b0(i, i);
  }
  const Complex mu1 = midpoint_minimax(d1);
  const Complex mu0 = midpoint_minimax(d0);
  auto [r1, r2] = detail::monic_quadratic_roots(mu1, mu0);

  const auto criterion = [&](Complex a) {
    ComplexMatrix t = b1;
    t *= a;
    t += b0;
    t.add_scaled_identity(a * a);
    return matrix_norm(t, norm);
  };
  const double c1 = criterion(r1);
  const double c2 = criterion(r2);
  Complex chosen = r1;
  double cc = c1, cr = c2;
  if (detail::prefer_second(r1, r2, c1, c2)) {
    chosen = r2;
    cc = c2;
    cr = c1;
  }
  NodeSelection sel;
  sel.newton_nodes = {chosen, -mu1 - chosen};
  sel.chosen_criterion = cc;
  sel.rejected_criterion = cr;
  return sel;
}

/// Discretized acoustic wave problem on the unit square with impedance zeta:
/// raw coefficients (A2, A1, A0) of size m = ell*(ell-1) and the monicized
/// pair (B1, B0) = (A2^-1 A1, A2^-1 A0).
struct AcousticProblem {
  MatrixPolynomial raw;
  MatrixPolynomial monic;
};

inline AcousticProblem acoustic(std::size_t ell, Complex zeta) {
  if (ell < 2) throw dimension_error("acoustic: ell must be >= 2");
  if (zeta == 0.0) throw precondition_error("acoustic: zeta must be nonzero");
  const double pi = std::numbers::pi;
  const double elld = static_cast<double>(ell);

  ComplexMatrix s = ComplexMatrix::tridiagonal(ell, -1.0, 4.0, -1.0);
  s(ell - 1, ell - 1) = 2.0;
  const ComplexMatrix t = ComplexMatrix::tridiagonal(ell - 1, -1.0, 0.0, -1.0);

  // E = e_l e_l^T, D = I - E/2 on the inner grid dimension.
  ComplexMatrix e(ell, ell);
  e(ell - 1, ell - 1) = 1.0;
  ComplexMatrix dmat = ComplexMatrix::identity(ell);
  dmat(ell - 1, ell - 1) = 0.5;

  ComplexMatrix a0 = kron(ComplexMatrix::identity(ell - 1), s) + kron(t, dmat * Complex(-1.0));
  ComplexMatrix a1 = kron(ComplexMatrix::identity(ell - 1), e);
  a1 *= 2.0 * pi / (elld * zeta);
  ComplexMatrix a2 = kron(ComplexMatrix::identity(ell - 1), dmat);
  a2 *= -4.0 * pi * pi / (elld * elld);

  MatrixPolynomial raw({a0, a1, a2});
  LuFactorization lu(a2);
  MatrixPolynomial monic({lu.solve(a0), lu.solve(a1), ComplexMatrix::identity(raw.size())});
  return {std::move(raw), std::move(monic)};
}

namespace detail {

inline double string_integrand(double x, int k, int l, double eps, double delta) {
  const double pi = std::numbers::pi;
  const double w = x * (pi - x);
  return 2.0 * eps * (w * w - delta) * std::sin(k * x) * std::sin(l * x);
}

/// Composite Simpson on [0, pi] with the given (even) panel count.
inline double string_entry_simpson(int k, int l, double eps, double delta, std::size_t panels) {
  const double pi = std::numbers::pi;
  const double h = pi / static_cast<double>(panels);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < panels; i += 2) odd += string_integrand(i * h, k, l, eps, delta);
  for (std::size_t i = 2; i < panels; i += 2) even += string_integrand(i * h, k, l, eps, delta);
  const double ends =
      string_integrand(0.0, k, l, eps, delta) + string_integrand(pi, k, l, eps, delta);
  return h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
}

/// Panel-doubling until two successive refinements differ by less than 1e-12.
/// Starts above the Nyquist rate of the sin(kx) sin(lx) oscillation so the
/// agreement test never fires on an aliased pair.
inline double string_entry(int k, int l, double eps, double delta) {
  std::size_t panels = 64;
  while (panels < static_cast<std::size_t>(8 * (k + l))) panels *= 2;
  double prev = string_entry_simpson(k, l, eps, delta, panels);
  for (;;) {
    panels *= 2;
    const double next = string_entry_simpson(k, l, eps, delta, panels);
    if (std::abs(next - prev) < 1e-12 || panels >= (std::size_t{1} << 22)) return next;
    prev = next;
  }
}

}  // namespace detail

/// Galerkin matrices of the damped vibrating string in the sine basis:
/// I z^2 + A1 z + A0 with A0 = pi * diag(j^2) and
/// (A1)_kl = 2 eps * integral_0^pi (x^2 (pi-x)^2 - delta) sin(kx) sin(lx) dx.
inline MatrixPolynomial string_galerkin(std::size_t n_basis, double eps, double delta) {
  if (n_basis < 1) throw dimension_error("string_galerkin: n_basis must be >= 1");
  const std::size_t m = n_basis;
  ComplexMatrix a0(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const double jj = static_cast<double>(j + 1);
    a0(j, j) = std::numbers::pi * jj * jj;
  }
  ComplexMatrix a1(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = k; l < m; ++l) {
      const double v =
          detail::string_entry(static_cast<int>(k + 1), static_cast<int>(l + 1), eps, delta);
      a1(k, l) = v;
      a1(l, k) = v;
    }
  return MatrixPolynomial({std::move(a0), std::move(a1), ComplexMatrix::identity(m)});
}

}  // namespace mpbounds
