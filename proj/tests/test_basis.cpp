#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "mpbounds/basis.hpp"
#include "mpbounds/convert.hpp"
#include "mpbounds/problems.hpp"
#include "test_support.hpp"

using namespace mpbounds;
using Catch::Approx;

TEST_CASE("gamma is 1 for power and newton, the weight sum for the quadratic family", "[basis]") {
  REQUIRE(basis_gamma(GeneralizedBasis::power(4)) == 1.0);
  REQUIRE(basis_gamma(GeneralizedBasis::newton({Complex(1.0), Complex(-2.0, 0.5)})) == 1.0);

  // a=0, b=1, c=-1: weights 1/2 + 1/2
  REQUIRE(basis_gamma(GeneralizedBasis::quadratic_general(0.0, 1.0, -1.0)) == Approx(1.0));

  // the mass-spring family at tau=1, kappa=8
  const Complex b(-1.5, std::sqrt(87.0) / 2.0);
  const auto qb = GeneralizedBasis::quadratic_general(-8.0, b, std::conj(b));
  REQUIRE(std::abs(qb.gamma() - 16.0 / std::sqrt(87.0)) <= 1e-14);

  std::mt19937_64 rng(121);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = testsupport::random_complex(rng, 3.0);
    const Complex bb = testsupport::random_complex(rng, 3.0);
    Complex cc = testsupport::random_complex(rng, 3.0);
    if (std::abs(bb - cc) < 0.05) cc += Complex(1.0);
    REQUIRE(basis_gamma(GeneralizedBasis::quadratic_general(a, bb, cc)) >= 1.0 - 1e-15);
  }
}

TEST_CASE("coincident quadratic pair collapses to a newton basis", "[basis]") {
  const Complex b(2.0, -1.0);
  const auto basis = GeneralizedBasis::quadratic_general(Complex(5.0), b, b);
  REQUIRE(basis.kind() == BasisKind::Newton);
  REQUIRE(basis.nodes() == std::vector<Complex>{b, b});
  REQUIRE(basis.gamma() == 1.0);
}

TEST_CASE("newton q_j vanishes at its nodes", "[basis]") {
  const std::vector<Complex> nodes{Complex(1.0), Complex(-2.0, 1.0), Complex(0.5, -0.5)};
  const auto basis = GeneralizedBasis::newton(nodes);
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t i = 0; i < j; ++i)
      REQUIRE(std::abs(basis.evaluate_q(j, nodes[i])) < 1e-12);
  REQUIRE(basis.evaluate_q(0, Complex(42.0)) == Complex(1.0));
}

TEST_CASE("basis_zeros clusters by center", "[basis]") {
  SECTION("power basis piles everything at the origin") {
    const auto clusters = basis_zeros(GeneralizedBasis::power(3), 3);
    REQUIRE(clusters.size() == 1);
    REQUIRE(clusters[0].center == Complex(0.0));
    REQUIRE(clusters[0].degrees == std::vector<int>{1, 2, 3});
    REQUIRE(clusters[0].leading_multiplicity == 3);
  }
  SECTION("newton with distinct nodes gives one cluster per node") {
    const auto basis = GeneralizedBasis::newton({Complex(0.0), Complex(1.0), Complex(2.0)});
    const auto clusters = basis_zeros(basis, 3);
    REQUIRE(clusters.size() == 3);
    REQUIRE(clusters[0].degrees == std::vector<int>{1, 2, 3});
    REQUIRE(clusters[1].degrees == std::vector<int>{2, 3});
    REQUIRE(clusters[2].degrees == std::vector<int>{3});
    REQUIRE(clusters[0].leading_multiplicity == 1);
    REQUIRE(clusters[2].leading_multiplicity == 1);
  }
  SECTION("nearly equal zeros merge under the relative tolerance") {
    const Complex a(1.0);
    const auto basis = GeneralizedBasis::newton({a, a + Complex(1e-12)});
    REQUIRE(basis_zeros(basis, 2).size() == 1);
    const auto apart = GeneralizedBasis::newton({a, a + Complex(1e-8)});
    REQUIRE(basis_zeros(apart, 2).size() == 2);
  }
  SECTION("cluster count never exceeds n(n+1)/2") {
    std::mt19937_64 rng(232);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial % 5;
      std::vector<Complex> nodes;
      for (std::size_t j = 0; j < n; ++j) nodes.push_back(testsupport::random_complex(rng, 2.0));
      const auto clusters = basis_zeros(GeneralizedBasis::newton(nodes), n);
      REQUIRE(clusters.size() <= n * (n + 1) / 2);
      int leading = 0;
      for (const auto& c : clusters) leading += c.leading_multiplicity;
      REQUIRE(leading == static_cast<int>(n));
    }
  }
}

TEST_CASE("generic basis validation", "[basis]") {
  const std::vector<std::vector<Complex>> zeros{{Complex(0.0)}, {Complex(1.0), Complex(-1.0)}};
  const std::vector<std::vector<double>> alphas{{1.0}, {0.5, 0.5}};
  const auto basis = GeneralizedBasis::generic(zeros, alphas, 1.0);
  REQUIRE(basis.degree() == 2);
  REQUIRE(basis.gamma() == 1.0);

  REQUIRE_THROWS_AS(GeneralizedBasis::generic(zeros, alphas, 0.9), invalid_basis_error);
  REQUIRE_THROWS_AS(GeneralizedBasis::generic(zeros, {{1.0}, {0.5}}, 1.0), invalid_basis_error);
  REQUIRE_THROWS_AS(GeneralizedBasis::generic(zeros, {{1.0}, {-0.5, 0.5}}, 1.0),
                    invalid_basis_error);
  REQUIRE_THROWS_AS(GeneralizedBasis::generic({{Complex(0.0), Complex(1.0)}}, {{1.0, 0.0}}, 1.0),
                    invalid_basis_error);
}

TEST_CASE("condition holds with near-zero slack for newton bases", "[basis][condition]") {
  const auto basis =
      GeneralizedBasis::newton({Complex(1.0, 0.5), Complex(-2.0), Complex(0.0, -1.5)});
  const auto report = verify_basis_condition(basis, 3, 36, 7);
  REQUIRE(report.holds);
  REQUIRE(std::abs(report.worst_slack) <= 1e-12);
  REQUIRE_FALSE(report.witness.has_value());
  REQUIRE(report.samples_used > 0);
}

TEST_CASE("condition holds for the quadratic family and fails when weights shrink", "[basis][condition]") {
  const Complex b(-1.5, std::sqrt(87.0) / 2.0);
  const auto family = GeneralizedBasis::quadratic_general(-8.0, b, std::conj(b));
  const auto good = verify_basis_condition(family, 2, 36, 11);
  REQUIRE(good.holds);
  REQUIRE(good.worst_slack >= -1e-10);

  // Same zeros, weights halved: the degree-2 bound must now fail somewhere.
  auto halved = family.alphas_of(2);
  for (double& a : halved) a *= 0.5;
  const auto bad_basis = GeneralizedBasis::generic(
      {family.zeros_of(1), family.zeros_of(2)}, {family.alphas_of(1), halved}, family.gamma());
  const auto bad = verify_basis_condition(bad_basis, 2, 36, 11);
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
}

TEST_CASE("convert_quadratic closed forms", "[convert]") {
  SECTION("power basis passes through") {
    ComplexMatrix a1(2, 2), a0(2, 2);
    a1(0, 1) = 2.0;
    a0(1, 0) = -3.0;
    const auto c = convert_quadratic(a1, a0, GeneralizedBasis::power(2));
    REQUIRE(c.coefficients[0] == a0);
    REQUIRE(c.coefficients[1] == a1);
    REQUIRE(c.coefficients[2] == ComplexMatrix::identity(2));
  }
  SECTION("scalar quadratic against hand-expanded newton coefficients") {
    // z^2 + 3z + 2 = (z+1)(z+2): in the newton basis on (-1, -2) the
    // coefficients are exactly (0, 0, 1).
    ComplexMatrix a1(1, 1), a0(1, 1);
    a1(0, 0) = 3.0;
    a0(0, 0) = 2.0;
    const auto c = convert_quadratic(a1, a0, GeneralizedBasis::newton({-1.0, -2.0}));
    REQUIRE(std::abs(c.coefficients[0](0, 0)) < 1e-15);
    REQUIRE(std::abs(c.coefficients[1](0, 0)) < 1e-15);
    REQUIRE(c.coefficients[2](0, 0) == Complex(1.0));
  }
  SECTION("mass-spring family coefficients collapse to known matrices") {
    // tau=1, kappa=8: C1 = tridiag(-1,0,-1), C0 = 0.
    const auto p = mass_spring(7, 1.0, 8.0);
    const auto nodes = mass_spring_nodes(1.0, 8.0);
    REQUIRE(nodes.general_nodes.has_value());
    const auto& g = *nodes.general_nodes;
    const auto basis = GeneralizedBasis::quadratic_general(g[0], g[1], g[2]);
    const auto c = convert_quadratic(p.coefficient(1), p.coefficient(0), basis);
    REQUIRE(one_norm(c.coefficients[1] - ComplexMatrix::tridiagonal(7, -1.0, 0.0, -1.0)) < 1e-12);
    REQUIRE(one_norm(c.coefficients[0]) < 1e-12);
  }
  SECTION("shape mismatches are rejected") {
    REQUIRE_THROWS_AS(
        convert_quadratic(ComplexMatrix(2, 2), ComplexMatrix(3, 3), GeneralizedBasis::power(2)),
        dimension_error);
    REQUIRE_THROWS_AS(
        convert_quadratic(ComplexMatrix(2, 2), ComplexMatrix(2, 2), GeneralizedBasis::power(3)),
        dimension_error);
  }
}

TEST_CASE("convert_to_basis agrees with the closed forms and inverts exactly", "[convert]") {
  std::mt19937_64 rng(343);

  SECTION("power target returns the coefficients unchanged") {
    std::vector<ComplexMatrix> coeffs;
    for (int j = 0; j < 4; ++j) coeffs.push_back(testsupport::random_matrix(rng, 3));
    coeffs.push_back(ComplexMatrix::identity(3));
    MatrixPolynomial p(coeffs);
    const auto c = convert_to_basis(p, GeneralizedBasis::power(4));
    for (std::size_t j = 0; j < coeffs.size(); ++j) REQUIRE(c.coefficients[j] == coeffs[j]);
  }

  SECTION("monic quadratics: general path matches convert_quadratic") {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t m = 1 + trial % 3;
      const auto a1 = testsupport::random_matrix(rng, m, 5.0);
      const auto a0 = testsupport::random_matrix(rng, m, 5.0);
      GeneralizedBasis basis = (trial % 2 == 0)
          ? GeneralizedBasis::newton({testsupport::random_complex(rng, 3.0),
                                      testsupport::random_complex(rng, 3.0)})
          : GeneralizedBasis::quadratic_general(testsupport::random_complex(rng, 3.0),
                                                testsupport::random_complex(rng, 3.0),
                                                testsupport::random_complex(rng, 3.0) + 7.0);
      const auto via_quadratic = convert_quadratic(a1, a0, basis);
      MatrixPolynomial p({a0, a1, ComplexMatrix::identity(m)});
      const auto via_general = convert_to_basis(p, basis);
      double scale = 1.0 + one_norm(a0) + one_norm(a1);
      for (int j = 0; j < 3; ++j)
        REQUIRE(one_norm(via_general.coefficients[j] - via_quadratic.coefficients[j]) <
                1e-12 * scale);
    }
  }

  SECTION("scalar cubic in a triple-node newton basis has binomial coefficients") {
    // z^3 on nodes (1,1,1): z^3 = 1 + 3(z-1) + 3(z-1)^2 + (z-1)^3.
    std::vector<ComplexMatrix> coeffs(4, ComplexMatrix(1, 1));
    coeffs[3](0, 0) = 1.0;
    MatrixPolynomial p(coeffs);
    const auto basis = GeneralizedBasis::newton({1.0, 1.0, 1.0});
    const auto c = convert_to_basis(p, basis);
    REQUIRE(c.coefficients[0](0, 0).real() == Approx(1.0));
    REQUIRE(c.coefficients[1](0, 0).real() == Approx(3.0));
    REQUIRE(c.coefficients[2](0, 0).real() == Approx(3.0));
    REQUIRE(c.coefficients[3](0, 0).real() == Approx(1.0));
  }

  SECTION("evaluation is preserved and re-expansion round-trips") {
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t m = 1 + trial % 3;
      const std::size_t n = 1 + trial % 4;
      std::vector<ComplexMatrix> coeffs;
      for (std::size_t j = 0; j <= n; ++j) coeffs.push_back(testsupport::random_matrix(rng, m));
      MatrixPolynomial p(coeffs);
      std::vector<Complex> nodes;
      for (std::size_t j = 0; j < n; ++j) nodes.push_back(testsupport::random_complex(rng, 2.0));
      const auto basis = GeneralizedBasis::newton(nodes);
      const auto c = convert_to_basis(p, basis);

      for (int s = 0; s < 20; ++s) {
        const Complex z = testsupport::random_complex(rng, 3.0);
        const auto diff = p.evaluate(z) - c.evaluate(z);
        double scale = 0.0;
        for (const auto& cf : coeffs) scale = std::max(scale, one_norm(cf));
        REQUIRE(one_norm(diff) < 1e-10 * (1.0 + scale * std::pow(4.0 + 2.0, double(n))));
      }

      const auto back = to_power_basis(c);
      for (std::size_t j = 0; j <= n; ++j) {
        const double scale = 1.0 + one_norm(p.coefficient(j));
        REQUIRE(one_norm(back.coefficient(j) - p.coefficient(j)) < 1e-12 * scale);
      }
    }
  }

  SECTION("degree mismatch is rejected") {
    std::vector<ComplexMatrix> coeffs(3, ComplexMatrix::identity(2));
    MatrixPolynomial p(coeffs);
    REQUIRE_THROWS_AS(convert_to_basis(p, GeneralizedBasis::power(3)), dimension_error);
  }
}
