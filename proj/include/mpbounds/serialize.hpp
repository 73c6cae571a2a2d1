#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpbounds/basis.hpp"
#include "mpbounds/convert.hpp"
#include "mpbounds/error.hpp"
#include "mpbounds/matrix.hpp"
#include "mpbounds/polynomial.hpp"
#include "mpbounds/problems.hpp"
#include "mpbounds/region.hpp"

namespace mpbounds {

// Plain nlohmann::json keeps object keys sorted, so build -> dump and
// parse -> dump agree byte for byte.
using Json = nlohmann::json;

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw precondition_error("json: complex must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw precondition_error("json: matrix must be a row array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw precondition_error("json: ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

/// Basis as {"variant", ...}: newton carries "nodes", the quadratic family
/// carries "a"/"b"/"c", generic carries "zeros"/"alphas"/"gamma", power
/// carries its "degree" (nothing else pins it down). Unused fields stay out.
inline Json to_json(const GeneralizedBasis& b) {
  Json j;
  switch (b.kind()) {
    case BasisKind::Power:
      j["variant"] = "power";
      j["degree"] = b.degree();
      break;
    case BasisKind::Newton: {
      j["variant"] = "newton";
      Json nodes = Json::array();
      for (const Complex& z : b.nodes()) nodes.push_back(to_json(z));
      j["nodes"] = std::move(nodes);
      break;
    }
    case BasisKind::QuadraticGeneral:
      j["variant"] = "quadratic_general";
      j["a"] = to_json(b.node_a());
      j["b"] = to_json(b.node_b());
      j["c"] = to_json(b.node_c());
      break;
    case BasisKind::Generic: {
      j["variant"] = "generic";
      Json zeros = Json::array();
      Json alphas = Json::array();
      for (std::size_t deg = 1; deg <= b.degree(); ++deg) {
        Json zrow = Json::array();
        for (const Complex& z : b.zeros_of(deg)) zrow.push_back(to_json(z));
        zeros.push_back(std::move(zrow));
        alphas.push_back(b.alphas_of(deg));
      }
      j["zeros"] = std::move(zeros);
      j["alphas"] = std::move(alphas);
      j["gamma"] = b.gamma();
      break;
    }
  }
  return j;
}

inline GeneralizedBasis basis_from_json(const Json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "power") return GeneralizedBasis::power(j.at("degree").get<std::size_t>());
  if (variant == "newton") {
    std::vector<Complex> nodes;
    for (const auto& v : j.at("nodes")) nodes.push_back(complex_from_json(v));
    return GeneralizedBasis::newton(std::move(nodes));
  }
  if (variant == "quadratic_general")
    return GeneralizedBasis::quadratic_general(complex_from_json(j.at("a")),
                                               complex_from_json(j.at("b")),
                                               complex_from_json(j.at("c")));
  if (variant == "generic") {
    std::vector<std::vector<Complex>> zeros;
    for (const auto& row : j.at("zeros")) {
      std::vector<Complex> zrow;
      for (const auto& v : row) zrow.push_back(complex_from_json(v));
      zeros.push_back(std::move(zrow));
    }
    std::vector<std::vector<double>> alphas;
    for (const auto& row : j.at("alphas")) alphas.push_back(row.get<std::vector<double>>());
    return GeneralizedBasis::generic(std::move(zeros), std::move(alphas),
                                     j.at("gamma").get<double>());
  }
  throw precondition_error("json: unknown basis variant " + variant);
}

inline Json to_json(const InclusionRegion& region) {
  Json j;
  j["gamma"] = region.gamma;
  j["rho"] = region.rho;
  j["radius"] = region.radius;
  Json disks = Json::array();
  for (const Disk& d : region.disks) {
    Json dj;
    dj["center"] = to_json(d.center);
    dj["radius"] = d.radius;
    dj["qn_mult"] = d.qn_multiplicity;
    disks.push_back(std::move(dj));
  }
  j["disks"] = std::move(disks);
  j["components"] = region.components;
  j["predicted_counts"] = region.predicted_counts;
  return j;
}

inline InclusionRegion region_from_json(const Json& j) {
  InclusionRegion region;
  region.gamma = j.at("gamma").get<double>();
  region.rho = j.at("rho").get<double>();
  region.radius = j.at("radius").get<double>();
  for (const auto& dj : j.at("disks")) {
    Disk d;
    d.center = complex_from_json(dj.at("center"));
    d.radius = dj.at("radius").get<double>();
    d.qn_multiplicity = dj.at("qn_mult").get<int>();
    region.disks.push_back(std::move(d));
  }
  region.components = j.at("components").get<std::vector<std::vector<int>>>();
  region.predicted_counts = j.at("predicted_counts").get<std::vector<long>>();
  return region;
}

inline const char* to_string(CountComparison c) {
  switch (c) {
    case CountComparison::Match:
      return "match";
    case CountComparison::Mismatch:
      return "mismatch";
    case CountComparison::BoundaryAmbiguous:
      return "boundary_ambiguous";
    case CountComparison::NotApplicable:
      return "not_applicable";
  }
  return "not_applicable";
}

inline std::vector<Complex> sorted_lexicographic(std::vector<Complex> values) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return values;
}

inline Json to_json(const VerificationReport& report) {
  Json j;
  j["contained"] = report.contained;
  j["worst_margin"] = report.worst_margin;
  j["observed_counts"] = report.observed_counts;
  j["counts_match"] = to_string(report.counts_match);
  j["boundary_flagged"] = report.boundary_flagged;
  Json eigs = Json::array();
  for (const Complex& z : sorted_lexicographic(report.eigenvalues.values))
    eigs.push_back(to_json(z));
  j["eigenvalues"] = std::move(eigs);
  return j;
}

inline Json to_json(const NodeSelection& sel) {
  Json j;
  j["newton_nodes"] =
      Json::array({to_json(sel.newton_nodes.first), to_json(sel.newton_nodes.second)});
  if (sel.general_nodes) {
    j["general_nodes"] = Json::array({to_json((*sel.general_nodes)[0]),
                                      to_json((*sel.general_nodes)[1]),
                                      to_json((*sel.general_nodes)[2])});
  } else {
    j["general_nodes"] = nullptr;
  }
  j["chosen_criterion"] = sel.chosen_criterion;
  j["rejected_criterion"] = sel.rejected_criterion;
  return j;
}

inline Json to_json(const MatrixPolynomial& p) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  j["coefficients"] = std::move(coeffs);
  if (!p.in_power_basis()) j["basis"] = to_json(p.basis());
  return j;
}

inline MatrixPolynomial polynomial_from_json(const Json& j) {
  std::vector<ComplexMatrix> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(matrix_from_json(c));
  if (j.contains("basis"))
    return MatrixPolynomial(std::move(coeffs), basis_from_json(j.at("basis")));
  return MatrixPolynomial(std::move(coeffs));
}

/// Header "re,im", rows sorted lexicographically, shortest round-trip floats.
inline void write_eigenvalues_csv(std::ostream& out, std::vector<Complex> values) {
  values = sorted_lexicographic(std::move(values));
  out << "re,im\n";
  char buf[64];
  for (const Complex& z : values) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
    out << buf;
  }
}

}  // namespace mpbounds
