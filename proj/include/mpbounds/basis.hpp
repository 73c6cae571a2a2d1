#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "mpbounds/error.hpp"
#include "mpbounds/matrix.hpp"

namespace mpbounds {

enum class BasisKind { Power, Newton, QuadraticGeneral, Generic };

/// Monic coefficients c_0..c_k of prod (z - r) over the given roots.
inline std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (const Complex& r : roots) {
    c.push_back(c.back());
    for (std::size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - r * c[j];
    c[0] *= -r;
  }
  return c;
}

/// A degree-graded family {q_0 = 1, q_1, ..., q_n} of monic polynomials for
/// which the ratio |q_{j-1}(z) / q_j(z)| is dominated by a weighted sum of
/// reciprocal distances to the zeros of q_j, with weights alpha_i^(j) whose
/// per-degree sums stay at or below a single constant gamma.
class GeneralizedBasis {
 public:
  static GeneralizedBasis power(std::size_t degree) {
    if (degree == 0) throw invalid_basis_error("power basis: degree must be >= 1");
    GeneralizedBasis b;
    b.kind_ = BasisKind::Power;
    b.degree_ = degree;
    b.gamma_ = 1.0;
    return b;
  }

  static GeneralizedBasis newton(std::vector<Complex> nodes) {
    if (nodes.empty()) throw invalid_basis_error("newton basis: needs at least one node");
    GeneralizedBasis b;
    b.kind_ = BasisKind::Newton;
    b.degree_ = nodes.size();
    b.nodes_ = std::move(nodes);
    b.gamma_ = 1.0;
    return b;
  }

  /// {1, z - a, (z - b)(z - c)}. A coincident pair b = c collapses the family
  /// to the Newton basis on (b, b), which is what it is in that case.
  static GeneralizedBasis quadratic_general(Complex a, Complex b, Complex c) {
    if (b == c) return newton({b, b});
    GeneralizedBasis g;
    g.kind_ = BasisKind::QuadraticGeneral;
    g.degree_ = 2;
    g.a_ = a;
    g.b_ = b;
    g.c_ = c;
    g.gamma_ = (std::abs(a - b) + std::abs(a - c)) / std::abs(c - b);
    return g;
  }

  static GeneralizedBasis generic(std::vector<std::vector<Complex>> zeros_per_degree,
                                  std::vector<std::vector<double>> alphas_per_degree,
                                  double gamma) {
    if (zeros_per_degree.empty())
      throw invalid_basis_error("generic basis: needs at least degree 1");
    if (alphas_per_degree.size() != zeros_per_degree.size())
      throw invalid_basis_error("generic basis: zeros/alphas degree counts differ");
    if (!(gamma > 0.0)) throw invalid_basis_error("generic basis: gamma must be positive");
    for (std::size_t j = 0; j < zeros_per_degree.size(); ++j) {
      if (zeros_per_degree[j].size() != j + 1)
        throw invalid_basis_error("generic basis: q_j must list exactly j zeros");
      if (alphas_per_degree[j].size() != j + 1)
        throw invalid_basis_error("generic basis: alphas misaligned with zeros");
      double sum = 0.0;
      for (double a : alphas_per_degree[j]) {
        if (a < 0.0) throw invalid_basis_error("generic basis: alphas must be nonnegative");
        sum += a;
      }
      if (sum > gamma * (1.0 + 1e-12))
        throw invalid_basis_error("generic basis: alpha sum exceeds gamma");
    }
    GeneralizedBasis b;
    b.kind_ = BasisKind::Generic;
    b.degree_ = zeros_per_degree.size();
    b.zeros_ = std::move(zeros_per_degree);
    b.alphas_ = std::move(alphas_per_degree);
    b.gamma_ = gamma;
    return b;
  }

  BasisKind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }
  double gamma() const { return gamma_; }
  const std::vector<Complex>& nodes() const { return nodes_; }
  Complex node_a() const { return a_; }
  Complex node_b() const { return b_; }
  Complex node_c() const { return c_; }

  /// Zeros of q_j, with multiplicity; j in 1..degree.
  std::vector<Complex> zeros_of(std::size_t j) const {
    require_degree(j);
    switch (kind_) {
      case BasisKind::Power:
        return std::vector<Complex>(j, Complex(0.0));
      case BasisKind::Newton:
        return std::vector<Complex>(nodes_.begin(), nodes_.begin() + static_cast<long>(j));
      case BasisKind::QuadraticGeneral:
        return j == 1 ? std::vector<Complex>{a_} : std::vector<Complex>{b_, c_};
      case BasisKind::Generic:
        return zeros_[j - 1];
    }
    return {};
  }

  /// Weights aligned with zeros_of(j).
  std::vector<double> alphas_of(std::size_t j) const {
    require_degree(j);
    switch (kind_) {
      case BasisKind::Power:
      case BasisKind::Newton: {
        std::vector<double> a(j, 0.0);
        a.back() = 1.0;
        return a;
      }
      case BasisKind::QuadraticGeneral: {
        if (j == 1) return {1.0};
        const double span = std::abs(c_ - b_);
        return {std::abs(a_ - b_) / span, std::abs(a_ - c_) / span};
      }
      case BasisKind::Generic:
        return alphas_[j - 1];
    }
    return {};
  }

  /// q_j(z) as the product over its zeros; q_0 = 1.
  Complex evaluate_q(std::size_t j, Complex z) const {
    if (j == 0) return Complex(1.0);
    Complex p(1.0);
    for (const Complex& r : zeros_of(j)) p *= z - r;
    return p;
  }

 private:
  void require_degree(std::size_t j) const {
    if (j == 0 || j > degree_) throw precondition_error("basis: degree index out of range");
  }

  BasisKind kind_ = BasisKind::Power;
  std::size_t degree_ = 0;
  std::vector<Complex> nodes_;
  Complex a_{}, b_{}, c_{};
  std::vector<std::vector<Complex>> zeros_;
  std::vector<std::vector<double>> alphas_;
  double gamma_ = 1.0;
};

inline double basis_gamma(const GeneralizedBasis& b) { return b.gamma(); }

/// One cluster of coinciding basis zeros.
struct BasisZeroCluster {
  Complex center;
  std::vector<int> degrees;      // sorted, distinct j with a zero of q_j here
  int leading_multiplicity = 0;  // zeros of q_n in the cluster, counted with multiplicity
};

/// Distinct zeros of q_1..q_n with the degrees that hit each of them. Two zeros
/// coincide when they are within 1e-10 * (1 + max modulus over all zeros).
inline std::vector<BasisZeroCluster> basis_zeros(const GeneralizedBasis& basis, std::size_t n) {
  if (n == 0 || n > basis.degree())
    throw precondition_error("basis_zeros: n out of range for basis degree");
  double max_mod = 0.0;
  for (std::size_t j = 1; j <= n; ++j)
    for (const Complex& r : basis.zeros_of(j)) max_mod = std::max(max_mod, std::abs(r));
  const double tol = 1e-10 * (1.0 + max_mod);

  std::vector<BasisZeroCluster> clusters;
  for (std::size_t j = 1; j <= n; ++j) {
    for (const Complex& r : basis.zeros_of(j)) {
      BasisZeroCluster* hit = nullptr;
      for (auto& c : clusters) {
        if (std::abs(r - c.center) <= tol) {
          hit = &c;
          break;
        }
      }
      if (!hit) {
        clusters.push_back({r, {}, 0});
        hit = &clusters.back();
      }
      if (hit->degrees.empty() || hit->degrees.back() != static_cast<int>(j))
        hit->degrees.push_back(static_cast<int>(j));
      if (j == n) ++hit->leading_multiplicity;
    }
  }
  return clusters;
}

struct ConditionReport {
  bool holds = true;
  double worst_slack = 0.0;  // min over samples of (weighted sum) - |q_{j-1}/q_j|
  std::optional<Complex> witness;
  std::size_t samples_used = 0;
};

/// Samples the basis condition on rings around every distinct zero: radii
/// {0.1, 1, 10} * (1 + |center|), `samples` seeded pseudo-random angles per
/// ring. Points within 1e-6 of any zero are skipped. The condition is deemed
/// to hold when the worst slack stays above -1e-10.
inline ConditionReport verify_basis_condition(const GeneralizedBasis& basis, std::size_t n,
                                              std::size_t samples = 36,
                                              std::uint64_t seed = 2026) {
  if (samples == 0) throw precondition_error("verify_basis_condition: samples must be >= 1");
  const auto clusters = basis_zeros(basis, n);

  std::vector<std::vector<Complex>> zeros(n + 1);
  std::vector<std::vector<double>> alphas(n + 1);
  std::vector<Complex> all_zeros;
  for (std::size_t j = 1; j <= n; ++j) {
    zeros[j] = basis.zeros_of(j);
    alphas[j] = basis.alphas_of(j);
    all_zeros.insert(all_zeros.end(), zeros[j].begin(), zeros[j].end());
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ConditionReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  const double ring_scales[] = {0.1, 1.0, 10.0};
  for (const auto& cluster : clusters) {
    for (double scale : ring_scales) {
      const double radius = scale * (1.0 + std::abs(cluster.center));
      const double offset = unit(rng);
      for (std::size_t k = 0; k < samples; ++k) {
        const double theta =
            2.0 * std::numbers::pi * (static_cast<double>(k) + offset) / static_cast<double>(samples);
        const Complex z = cluster.center + radius * Complex(std::cos(theta), std::sin(theta));
        bool excluded = false;
        for (const Complex& r : all_zeros) {
          if (std::abs(z - r) < 1e-6) {
            excluded = true;
            break;
          }
        }
        if (excluded) continue;
        ++report.samples_used;
        for (std::size_t j = 1; j <= n; ++j) {
          const double lhs = std::abs(basis.evaluate_q(j - 1, z)) / std::abs(basis.evaluate_q(j, z));
          double rhs = 0.0;
          for (std::size_t i = 0; i < zeros[j].size(); ++i)
            rhs += alphas[j][i] / std::abs(z - zeros[j][i]);
          const double slack = rhs - lhs;
          if (slack < report.worst_slack) {
            report.worst_slack = slack;
            if (slack < 0.0) report.witness = z;
          }
        }
      }
    }
  }
  report.holds = report.worst_slack >= -1e-10;
  if (report.holds) report.witness.reset();
  return report;
}

}  // namespace mpbounds
