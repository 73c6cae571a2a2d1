#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "mpbounds/error.hpp"
#include "mpbounds/matrix.hpp"

namespace mpbounds {

struct Spectrum {
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }

  /// Sorted copy, lexicographic by (re, im). Eigenvalue order is otherwise
  /// whatever the deflation produced.
  std::vector<Complex> sorted() const {
    std::vector<Complex> v = values;
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return v;
  }
};

namespace detail {

inline double cabs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

/// Osborne scaling with radix-2 factors. Diagonal similarity, eigenvalues
/// unchanged; no permutation pass since only eigenvalues are wanted.
inline void balance_in_place(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  const double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += cabs1(a(j, i));
        r += cabs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / radix) {
        c *= radix;
        r /= radix;
        f *= radix;
      }
      while (c >= r * radix) {
        c /= radix;
        r *= radix;
        f /= radix;
      }
      if (c + r < 0.95 * s) {
        done = false;
        const double g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

/// Householder reduction to upper Hessenberg form, transforms not accumulated.
inline void hessenberg_in_place(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<Complex> v(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale = std::max(scale, cabs1(a(i, k)));
    if (scale == 0.0) continue;

    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex t = a(i, k) / scale;
      norm2 += std::norm(t);
    }
    const double mu = scale * std::sqrt(norm2);

    const Complex alpha = a(k + 1, k);
    const double aa = std::abs(alpha);
    const Complex phase = aa > 0.0 ? alpha / aa : Complex(1.0);
    const Complex beta = -phase * mu;

    // v = x - beta*e1 gives a Hermitian unitary H = I - (2/s) v v^H
    // with H x = beta*e1 and s = v^H v = 2*(mu^2 + mu*|alpha|).
    v[k + 1] = alpha - beta;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    const double s = 2.0 * (mu * mu + mu * aa);
    const double tau = 2.0 / s;

    // Left: A -= tau * v (v^H A) on rows k+1..n-1, cols k..n-1.
    std::fill(w.begin() + k, w.end(), Complex(0.0));
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex vi = std::conj(v[i]);
      const Complex* arow = a.row(i);
      for (std::size_t j = k; j < n; ++j) w[j] += vi * arow[j];
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex tvi = tau * v[i];
      Complex* arow = a.row(i);
      for (std::size_t j = k; j < n; ++j) arow[j] -= tvi * w[j];
    }

    // Right: A -= tau * (A v) v^H on all rows, cols k+1..n-1.
    for (std::size_t i = 0; i < n; ++i) {
      Complex* arow = a.row(i);
      Complex t = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) t += arow[j] * v[j];
      t *= tau;
      for (std::size_t j = k + 1; j < n; ++j) arow[j] -= t * std::conj(v[j]);
    }

    a(k + 1, k) = beta;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

struct GivensRotation {
  double c;
  Complex s;
  Complex r;
};

inline GivensRotation make_givens(Complex f, Complex g) {
  if (g == 0.0) return {1.0, Complex(0.0), f};
  const double ag = std::abs(g);
  if (f == 0.0) return {0.0, std::conj(g) / ag, Complex(ag)};
  const double af = std::abs(f);
  const double d = std::hypot(af, ag);
  const Complex fs = f / af;
  return {af / d, fs * std::conj(g) / d, fs * d};
}

/// Eigenvalues of [[a, b], [c, d]]; the one nearer d goes second.
inline std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex p = (a - d) * 0.5;
  Complex q = std::sqrt(p * p + b * c);
  if (cabs1(p + q) < cabs1(p - q)) q = -q;
  const Complex den = p + q;
  if (cabs1(den) == 0.0) return {d, d};
  const Complex near_d = d - (b * c) / den;
  // p^2 - q^2 = -bc, so the two eigenvalues are d + den and d - bc/den.
  return {d + den, near_d};
}

/// Implicit single-shift QR on an upper Hessenberg matrix; eigenvalues only.
/// Total sweep budget is 30*n across all deflations.
inline std::vector<Complex> hessenberg_qr_eigenvalues(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<Complex> w(n);
  if (n == 0) return w;

  const double ulp = std::numeric_limits<double>::epsilon();
  const double smlnum = std::numeric_limits<double>::min() * (static_cast<double>(n) / ulp);
  double hnorm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = (i == 0 ? 0 : i - 1); j < n; ++j) hnorm = std::max(hnorm, cabs1(h(i, j)));

  long ihi = static_cast<long>(n) - 1;
  const long max_sweeps = 30 * static_cast<long>(n);
  long sweeps = 0;
  long block_its = 0;
  std::size_t converged = 0;

  while (ihi >= 0) {
    long l = ihi;
    while (l > 0) {
      const double sub = cabs1(h(l, l - 1));
      double tst = cabs1(h(l - 1, l - 1)) + cabs1(h(l, l));
      if (tst == 0.0) tst = hnorm;
      if (sub <= std::max(ulp * tst, smlnum)) {
        h(l, l - 1) = 0.0;
        break;
      }
      --l;
    }

    if (l == ihi) {
      w[ihi] = h(ihi, ihi);
      ++converged;
      --ihi;
      block_its = 0;
      continue;
    }
    if (l == ihi - 1) {
      const auto [e1, e2] = eig2x2(h(l, l), h(l, ihi), h(ihi, l), h(ihi, ihi));
      w[l] = e1;
      w[ihi] = e2;
      converged += 2;
      ihi -= 2;
      block_its = 0;
      continue;
    }

    if (sweeps >= max_sweeps) {
      std::vector<Complex> partial(w.end() - static_cast<long>(converged), w.end());
      throw convergence_error("dense_eigenvalues: sweep cap reached", std::move(partial));
    }
    ++sweeps;
    ++block_its;

    Complex sigma;
    if (block_its % 10 == 0) {
      sigma = h(ihi, ihi) + 0.75 * std::abs(h(ihi, ihi - 1));
    } else {
      sigma = eig2x2(h(ihi - 1, ihi - 1), h(ihi - 1, ihi), h(ihi, ihi - 1), h(ihi, ihi)).second;
    }

    Complex x = h(l, l) - sigma;
    Complex y = h(l + 1, l);
    for (long k = l; k < ihi; ++k) {
      const GivensRotation rot = make_givens(x, y);
      if (k > l) {
        h(k, k - 1) = rot.r;
        h(k + 1, k - 1) = 0.0;
      }
      for (long j = k; j <= ihi; ++j) {
        const Complex t1 = h(k, j), t2 = h(k + 1, j);
        h(k, j) = rot.c * t1 + rot.s * t2;
        h(k + 1, j) = -std::conj(rot.s) * t1 + rot.c * t2;
      }
      const long rmax = std::min(ihi, k + 2);
      for (long i = l; i <= rmax; ++i) {
        const Complex t1 = h(i, k), t2 = h(i, k + 1);
        h(i, k) = rot.c * t1 + std::conj(rot.s) * t2;
        h(i, k + 1) = -rot.s * t1 + rot.c * t2;
      }
      if (k < ihi - 1) {
        x = h(k + 1, k);
        y = h(k + 2, k);
      }
    }
  }
  return w;
}

}  // namespace detail

/// All eigenvalues of a square complex matrix: balance, Householder Hessenberg
/// reduction, then shifted QR. Throws convergence_error (with the eigenvalues
/// found so far) if the 30*n sweep budget runs out.
inline Spectrum dense_eigenvalues(ComplexMatrix m) {
  if (!m.is_square()) throw dimension_error("dense_eigenvalues: matrix not square");
  detail::balance_in_place(m);
  detail::hessenberg_in_place(m);
  return Spectrum{detail::hessenberg_qr_eigenvalues(m)};
}

}  // namespace mpbounds
