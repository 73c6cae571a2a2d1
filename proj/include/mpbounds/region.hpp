#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "mpbounds/basis.hpp"
#include "mpbounds/cauchy.hpp"
#include "mpbounds/convert.hpp"
#include "mpbounds/error.hpp"
#include "mpbounds/lu.hpp"
#include "mpbounds/matrix.hpp"
#include "mpbounds/polyeig.hpp"
#include "mpbounds/polynomial.hpp"
#include "mpbounds/union_find.hpp"

namespace mpbounds {

/// One inclusion disk |z - center| <= radius. All disks of a region share the
/// radius gamma * rho.
struct Disk {
  Complex center;
  double radius = 0.0;
  std::vector<int> source_degrees;   // the j whose q_j vanish at the center
  int qn_multiplicity = 0;           // zeros of q_n here, with multiplicity
};

/// Union of disks covering every eigenvalue, plus its decomposition into
/// connected components and the per-component eigenvalue counts the
/// disjointness argument predicts.
struct InclusionRegion {
  double gamma = 1.0;
  double rho = 0.0;
  double radius = 0.0;  // gamma * rho
  std::vector<Disk> disks;
  std::vector<std::vector<int>> components;  // partition of disk indices
  std::vector<long> predicted_counts;        // m * (zeros of q_n inside), per component
};

/// Connected components of equal-radius closed disks. Two disks are adjacent
/// when their center distance is at most 2*radius + tol_link with
/// tol_link = 1e-9 * (1 + radius + max center modulus); tangency connects.
/// Returns the partition (disk indices, each component sorted ascending,
/// components ordered by smallest index) and per-component predicted counts
/// m * sum of qn_multiplicity.
inline std::pair<std::vector<std::vector<int>>, std::vector<long>> components(
    const std::vector<Disk>& disks, std::size_t m) {
  if (disks.empty()) throw precondition_error("components: no disks");
  const double radius = disks.front().radius;
  double max_center = 0.0;
  for (const auto& d : disks) {
    if (d.radius != radius) throw precondition_error("components: disks must share one radius");
    max_center = std::max(max_center, std::abs(d.center));
  }
  const double tol_link = 1e-9 * (1.0 + radius + max_center);

  UnionFind uf(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t k = i + 1; k < disks.size(); ++k)
      if (std::abs(disks[i].center - disks[k].center) <= 2.0 * radius + tol_link) uf.unite(i, k);

  std::vector<std::vector<int>> parts;
  std::vector<long> counts;
  std::vector<long> root_slot(disks.size(), -1);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<long>(parts.size());
      parts.emplace_back();
      counts.push_back(0);
    }
    parts[root_slot[r]].push_back(static_cast<int>(i));
    counts[root_slot[r]] += static_cast<long>(m) * disks[i].qn_multiplicity;
  }
  return {std::move(parts), std::move(counts)};
}

/// Inclusion region for the eigenvalues of P(z) = sum C_j q_j(z): disks of
/// radius gamma * rho around the distinct zeros of q_1..q_n, where rho is the
/// Cauchy radius of the coefficient norms read as power coefficients. The
/// leading coefficient must be nonsingular.
inline InclusionRegion inclusion_region(const BasisCoefficients& coeffs, std::size_t m,
                                        Norm norm = Norm::One) {
  if (coeffs.coefficients.size() < 2)
    throw dimension_error("inclusion_region: degree must be >= 1");
  if (coeffs.size() != m) throw dimension_error("inclusion_region: m mismatch");
  const std::size_t n = coeffs.degree();
  if (coeffs.basis.degree() != n)
    throw dimension_error("inclusion_region: basis degree != coefficient degree");

  const double inv_leading = inverse_norm(coeffs.coefficients[n], norm);
  std::vector<double> lower(n);
  for (std::size_t j = 0; j < n; ++j) lower[j] = matrix_norm(coeffs.coefficients[j], norm);

  InclusionRegion region;
  region.gamma = coeffs.basis.gamma();
  region.rho = cauchy_radius(inv_leading, lower).rho;
  region.radius = region.gamma * region.rho;

  for (const auto& cluster : basis_zeros(coeffs.basis, n)) {
    Disk d;
    d.center = cluster.center;
    d.radius = region.radius;
    d.source_degrees = cluster.degrees;
    d.qn_multiplicity = cluster.leading_multiplicity;
    region.disks.push_back(std::move(d));
  }

  auto [parts, counts] = components(region.disks, m);
  region.components = std::move(parts);
  region.predicted_counts = std::move(counts);
  return region;
}

/// Smallest eigenvalue modulus certified by the reversed polynomial: with A_0
/// nonsingular, z^n P(1/z) keeps every eigenvalue of P at |z| >= 1/rho_rev.
/// Returns +infinity when the reversal has no positive Cauchy radius.
inline double reversal_exclusion(const MatrixPolynomial& p, Norm norm = Norm::One) {
  if (!p.in_power_basis())
    throw precondition_error("reversal_exclusion: power-basis polynomial required");
  const std::size_t n = p.degree();
  const double inv_leading = inverse_norm(p.coefficient(0), norm);
  std::vector<double> lower(n);
  for (std::size_t j = 0; j < n; ++j) lower[j] = matrix_norm(p.coefficient(n - j), norm);
  const double rho_rev = cauchy_radius(inv_leading, lower).rho;
  if (rho_rev == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rho_rev;
}

enum class CountComparison { Match, Mismatch, BoundaryAmbiguous, NotApplicable };

struct VerificationReport {
  Spectrum eigenvalues;
  bool contained = false;
  double worst_margin = 0.0;  // max over eigenvalues of dist-to-nearest-center - radius
  std::vector<long> observed_counts;  // aligned with region.components
  CountComparison counts_match = CountComparison::NotApplicable;
  std::size_t boundary_flagged = 0;
};

/// Checks a spectrum against a region. Containment allows a slack of
/// `tolerance` (default 1e-8) on disk boundaries. Per-component counts are
/// compared only when distinct components are separated by more than 1e-6
/// past the linking tolerance; eigenvalues within 1e-7 * (1 + radius) of
/// their component's boundary are flagged and may excuse a count discrepancy.
inline VerificationReport verify_containment(Spectrum spectrum, const InclusionRegion& region,
                                             double tolerance = 1e-8) {
  if (region.disks.empty()) throw precondition_error("verify_containment: empty region");
  VerificationReport report;
  report.eigenvalues = std::move(spectrum);

  const double radius = region.radius;
  const double tol_boundary = 1e-7 * (1.0 + radius);

  std::vector<long> disk_component(region.disks.size(), -1);
  for (std::size_t c = 0; c < region.components.size(); ++c)
    for (int idx : region.components[c]) disk_component[idx] = static_cast<long>(c);

  report.observed_counts.assign(region.components.size(), 0);
  report.worst_margin = -std::numeric_limits<double>::infinity();
  for (const Complex& z : report.eigenvalues.values) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_disk = 0;
    for (std::size_t i = 0; i < region.disks.size(); ++i) {
      const double dist = std::abs(z - region.disks[i].center);
      if (dist < best) {
        best = dist;
        best_disk = i;
      }
    }
    const double margin = best - radius;
    report.worst_margin = std::max(report.worst_margin, margin);
    ++report.observed_counts[disk_component[best_disk]];
    if (std::abs(margin) <= tol_boundary) ++report.boundary_flagged;
  }
  report.contained = report.worst_margin <= tolerance;

  // Disjointness slack between distinct components, past the linking band.
  double max_center = 0.0;
  for (const auto& d : region.disks) max_center = std::max(max_center, std::abs(d.center));
  const double tol_link = 1e-9 * (1.0 + radius + max_center);
  double separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < region.disks.size(); ++i)
    for (std::size_t k = i + 1; k < region.disks.size(); ++k) {
      if (disk_component[i] == disk_component[k]) continue;
      const double gap =
          std::abs(region.disks[i].center - region.disks[k].center) - 2.0 * radius - tol_link;
      separation = std::min(separation, gap);
    }

  if (separation <= 1e-6) {
    report.counts_match = CountComparison::NotApplicable;
    return report;
  }
  if (report.observed_counts == region.predicted_counts) {
    report.counts_match = CountComparison::Match;
    return report;
  }
  long excess = 0;
  for (std::size_t c = 0; c < report.observed_counts.size(); ++c)
    excess += std::max(0L, report.observed_counts[c] - region.predicted_counts[c]);
  report.counts_match = excess <= static_cast<long>(report.boundary_flagged)
                            ? CountComparison::BoundaryAmbiguous
                            : CountComparison::Mismatch;
  return report;
}

/// Same, with the spectrum taken from the brute-force oracle on p.
inline VerificationReport verify_containment(const MatrixPolynomial& p,
                                             const InclusionRegion& region,
                                             double tolerance = 1e-8) {
  return verify_containment(polyeig_oracle(p), region, tolerance);
}

}  // namespace mpbounds
