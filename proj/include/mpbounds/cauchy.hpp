#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "mpbounds/error.hpp"

namespace mpbounds {

struct CauchyResult {
  double rho = 0.0;
  /// f(rho) relative to the sum of term magnitudes at rho; the absolute value
  /// of f can be astronomically scaled for large roots, the relative residual
  /// is what convergence controls.
  double residual = 0.0;
  int iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
};

namespace detail {

inline double cauchy_f(double x, double c, const std::vector<double>& b) {
  // c*x^n - sum b_j x^j, Horner on (c, 0, ..., 0) minus Horner on b reversed.
  double acc = c;
  for (std::size_t j = b.size(); j-- > 0;) acc = acc * x - b[j];
  return acc;
}

inline double cauchy_df(double x, double c, const std::vector<double>& b) {
  const std::size_t n = b.size();
  double acc = static_cast<double>(n) * c;
  for (std::size_t j = n; j-- > 1;) acc = acc * x - static_cast<double>(j) * b[j];
  return acc;
}

}  // namespace detail

/// The unique positive root rho of
///   x^n / inv_leading_norm - sum_{j<n} lower_norms[j] x^j = 0,
/// with n = lower_norms.size(). Every zero of any matrix polynomial whose
/// coefficient norms these are lies in |z| <= rho. Returns rho = 0 when all
/// lower norms vanish. Bracketing by doubling from 1, bisection to relative
/// width 1e-14, then three Newton steps.
inline CauchyResult cauchy_radius(double inv_leading_norm, const std::vector<double>& lower_norms) {
  if (!(inv_leading_norm > 0.0) || !std::isfinite(inv_leading_norm))
    throw precondition_error("cauchy_radius: inv_leading_norm must be positive and finite");
  if (lower_norms.empty()) throw precondition_error("cauchy_radius: degree must be >= 1");
  bool any = false;
  for (double v : lower_norms) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw precondition_error("cauchy_radius: lower norms must be nonnegative and finite");
    if (v > 0.0) any = true;
  }
  if (!any) return {};

  const double c = 1.0 / inv_leading_norm;
  const auto f = [&](double x) { return detail::cauchy_f(x, c, lower_norms); };

  CauchyResult result;
  // f < 0 on (0, rho), f > 0 beyond; f(0) <= 0 always.
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    ++result.iterations;
    if (!std::isfinite(hi))
      throw precondition_error("cauchy_radius: bracketing overflow, inputs out of range");
  }
  result.bracket = {lo, hi};

  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? hi : lo) = mid;
    ++result.iterations;
  }

  double x = 0.5 * (lo + hi);
  for (int k = 0; k < 3; ++k) {
    const double d = detail::cauchy_df(x, c, lower_norms);
    if (d == 0.0) break;
    const double next = x - f(x) / d;
    if (!std::isfinite(next) || next <= 0.0) break;
    x = next;
    ++result.iterations;
  }

  result.rho = x;
  double term_sum = c;
  for (std::size_t j = lower_norms.size(); j-- > 0;) term_sum = term_sum * x + lower_norms[j];
  result.residual = f(x) / term_sum;
  return result;
}

}  // namespace mpbounds
