// Command-line front end: build a benchmark problem or load coefficients,
// pick a basis, compute the inclusion region, verify against the eigenvalue
// oracle, and emit JSON/CSV/SVG artifacts.
//
// Exit codes: 0 success (and containment holds under --verify),
// 2 containment violated, 1 usage or numerical error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mpbounds/mpbounds.hpp"

namespace {

using namespace mpbounds;

struct ProblemOptions {
  std::string family;       // mass-spring | acoustic | string
  std::string coeffs_path;  // power-basis coefficient matrices, JSON
  std::size_t m = 50;
  double tau = 1.0;
  double kappa = 8.0;
  std::size_t ell = 5;
  double zeta_re = 1.0;
  double zeta_im = 0.0;
  std::size_t n_basis = 10;
  double eps = 0.1;
  double delta = 2.7;
};

struct OutputOptions {
  std::string json_path;
  std::string csv_path;
  std::string svg_path;
};

void add_problem_flags(CLI::App& cmd, ProblemOptions& opt) {
  cmd.add_option("--family", opt.family, "Built-in family: mass-spring, acoustic, string")
      ->check(CLI::IsMember({"mass-spring", "acoustic", "string"}));
  cmd.add_option("--coeffs", opt.coeffs_path,
                 "JSON file with the polynomial's coefficient matrices");
  cmd.add_option("--m", opt.m, "mass-spring: matrix size (default 50)");
  cmd.add_option("--tau", opt.tau, "mass-spring: damping scale (default 1)");
  cmd.add_option("--kappa", opt.kappa, "mass-spring: stiffness scale (default 8)");
  cmd.add_option("--ell", opt.ell, "acoustic: grid parameter, size ell*(ell-1) (default 5)");
  cmd.add_option("--zeta-re", opt.zeta_re, "acoustic: Re(zeta) (default 1)");
  cmd.add_option("--zeta-im", opt.zeta_im, "acoustic: Im(zeta) (default 0)");
  cmd.add_option("--n-basis", opt.n_basis, "string: number of sine modes (default 10)");
  cmd.add_option("--eps", opt.eps, "string: damping strength (default 0.1)");
  cmd.add_option("--delta", opt.delta, "string: damping offset (default 2.7)");
}

Norm parse_norm(const std::string& name) { return name == "inf" ? Norm::Inf : Norm::One; }

/// The problem in power basis; acoustic contributes its monicized form.
MatrixPolynomial build_problem(const ProblemOptions& opt) {
  const bool has_family = !opt.family.empty();
  const bool has_file = !opt.coeffs_path.empty();
  if (has_family == has_file)
    throw precondition_error("exactly one of --family and --coeffs is required");
  if (has_file) {
    std::ifstream in(opt.coeffs_path);
    if (!in) throw precondition_error("cannot open " + opt.coeffs_path);
    const MatrixPolynomial p = polynomial_from_json(Json::parse(in));
    if (p.in_power_basis()) return p;
    return to_power_basis({p.coefficients(), p.basis()});
  }
  if (opt.family == "mass-spring") return mass_spring(opt.m, opt.tau, opt.kappa);
  if (opt.family == "acoustic") return acoustic(opt.ell, {opt.zeta_re, opt.zeta_im}).monic;
  return string_galerkin(opt.n_basis, opt.eps, opt.delta);
}

/// Basis from an explicit --nodes argument or the family's node recipe.
/// --nodes takes a JSON array of [re, im] nodes, or a full basis object
/// which then overrides --basis.
GeneralizedBasis resolve_basis(const std::string& name, const std::string& nodes_arg,
                               const MatrixPolynomial& p, const ProblemOptions& opt, Norm norm) {
  const std::size_t n = p.degree();
  if (!nodes_arg.empty()) {
    const Json j = Json::parse(nodes_arg);
    if (j.is_object()) return basis_from_json(j);
    if (!j.is_array()) throw precondition_error("--nodes must be a JSON array or basis object");
    std::vector<Complex> nodes;
    for (const auto& v : j) nodes.push_back(complex_from_json(v));
    if (name == "newton") {
      if (nodes.size() != n)
        throw precondition_error("newton basis needs exactly degree-many nodes");
      return GeneralizedBasis::newton(std::move(nodes));
    }
    if (name == "quadratic-general") {
      if (n != 2) throw precondition_error("quadratic-general applies to quadratics only");
      if (nodes.size() != 3) throw precondition_error("quadratic-general needs nodes [a, b, c]");
      return GeneralizedBasis::quadratic_general(nodes[0], nodes[1], nodes[2]);
    }
    throw precondition_error("--nodes is not accepted for basis '" + name +
                             "'; pass a full basis object instead");
  }

  if (name == "power") return GeneralizedBasis::power(n);
  if (name == "generic")
    throw precondition_error(
        "generic basis requires --nodes with a {\"variant\":\"generic\",...} object");

  std::optional<NodeSelection> sel;
  if (opt.family == "mass-spring") {
    sel = mass_spring_nodes(opt.tau, opt.kappa);
  } else if (n == 2 && p.is_monic()) {
    sel = general_nodes(p.coefficient(1), p.coefficient(0), norm);
  } else {
    throw precondition_error("no node recipe for this problem; pass --nodes");
  }
  if (name == "newton")
    return GeneralizedBasis::newton({sel->newton_nodes.first, sel->newton_nodes.second});
  if (!sel->general_nodes)
    throw precondition_error("quadratic family is undefined for this problem; pass --nodes");
  const auto& g = *sel->general_nodes;
  return GeneralizedBasis::quadratic_general(g[0], g[1], g[2]);
}

double power_basis_rho(const MatrixPolynomial& p, Norm norm) {
  std::vector<double> lower(p.degree());
  for (std::size_t j = 0; j < p.degree(); ++j) lower[j] = matrix_norm(p.coefficient(j), norm);
  return cauchy_radius(inverse_norm(p.leading(), norm), lower).rho;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw precondition_error("cannot open " + path);
  out << content;
  if (!out) throw precondition_error("write failed on " + path);
}

void emit_json(const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty())
    std::cout << text;
  else
    write_text(path, text);
}

bool region_contains(const InclusionRegion& region, Complex z, double tol) {
  for (const Disk& d : region.disks)
    if (std::abs(z - d.center) <= d.radius + tol) return true;
  return false;
}

int run_region(const ProblemOptions& popt, const std::string& basis_name,
               const std::string& nodes_arg, const std::string& norm_name, bool verify,
               const OutputOptions& out, std::uint64_t seed) {
  const Norm norm = parse_norm(norm_name);
  const MatrixPolynomial p = build_problem(popt);
  const GeneralizedBasis basis = resolve_basis(basis_name, nodes_arg, p, popt, norm);
  const InclusionRegion region = inclusion_region(convert_to_basis(p, basis), p.size(), norm);

  Json doc = to_json(region);
  if (basis.kind() == BasisKind::Generic) {
    // User-supplied alphas are only trusted after the sampler agrees.
    const auto cond = verify_basis_condition(basis, basis.degree(), 36, seed);
    if (!cond.holds) {
      std::ostringstream msg;
      msg << "generic basis violates the basis condition (worst slack " << cond.worst_slack
          << ")";
      throw invalid_basis_error(msg.str());
    }
    doc["basis_condition"] = Json{{"holds", true}, {"worst_slack", cond.worst_slack}};
  }

  std::optional<VerificationReport> report;
  if (verify) {
    report = verify_containment(p, region);
    doc["verification"] = to_json(*report);
  }

  if (!out.csv_path.empty()) {
    if (!report) throw precondition_error("--csv requires --verify on the region command");
    std::ostringstream csv;
    write_eigenvalues_csv(csv, report->eigenvalues.values);
    write_text(out.csv_path, csv.str());
  }
  if (!out.svg_path.empty()) {
    std::ostringstream svg;
    write_region_svg(svg, power_basis_rho(p, norm), region,
                     report ? &report->eigenvalues.values : nullptr);
    write_text(out.svg_path, svg.str());
  }
  emit_json(doc, out.json_path);
  return report && !report->contained ? 2 : 0;
}

int run_eigs(const ProblemOptions& popt, const OutputOptions& out) {
  const MatrixPolynomial p = build_problem(popt);
  const std::size_t total = p.degree() * p.size();
  if (total > 1000) {
    std::ostringstream msg;
    msg << "refusing eigenvalue sweep: degree * size = " << total << " exceeds 1000";
    throw precondition_error(msg.str());
  }
  const Spectrum spectrum = polyeig_oracle(p);

  std::ostringstream csv;
  write_eigenvalues_csv(csv, spectrum.values);
  if (!out.csv_path.empty()) write_text(out.csv_path, csv.str());
  if (!out.json_path.empty()) {
    Json doc;
    Json eigs = Json::array();
    for (const Complex& z : sorted_lexicographic(spectrum.values)) eigs.push_back(to_json(z));
    doc["eigenvalues"] = std::move(eigs);
    emit_json(doc, out.json_path);
  }
  if (out.csv_path.empty() && out.json_path.empty()) std::cout << csv.str();
  return 0;
}

int run_compare(const ProblemOptions& popt, const std::vector<std::string>& basis_names,
                const std::vector<std::string>& nodes_args, const std::string& norm_name,
                bool verify, const OutputOptions& out) {
  const Norm norm = parse_norm(norm_name);
  const MatrixPolynomial p = build_problem(popt);

  Json doc;
  doc["degree"] = p.degree();
  doc["size"] = p.size();
  try {
    doc["reversal_r_min"] = reversal_exclusion(p, norm);
  } catch (const singular_matrix_error&) {
    doc["reversal_r_min"] = nullptr;
  }

  std::optional<Spectrum> oracle;
  if (verify) oracle = polyeig_oracle(p);

  bool all_contained = true;
  std::vector<InclusionRegion> regions;
  Json entries = Json::array();
  for (std::size_t i = 0; i < basis_names.size(); ++i) {
    const std::string nodes_arg = i < nodes_args.size() ? nodes_args[i] : std::string();
    const GeneralizedBasis basis = resolve_basis(basis_names[i], nodes_arg, p, popt, norm);
    const InclusionRegion region =
        inclusion_region(convert_to_basis(p, basis), p.size(), norm);

    Json entry;
    entry["basis"] = to_json(basis);
    entry["region"] = to_json(region);
    if (verify) {
      const auto report = verify_containment(*oracle, region);
      all_contained = all_contained && report.contained;
      Json vj = to_json(report);
      vj.erase("eigenvalues");  // reported once, under "eigenvalues"
      entry["verification"] = std::move(vj);
    }
    entries.push_back(std::move(entry));
    regions.push_back(std::move(region));
  }
  doc["regions"] = std::move(entries);

  if (verify) {
    const std::vector<Complex> sorted = sorted_lexicographic(oracle->values);
    Json eigs = Json::array();
    Json member = Json::array();
    std::size_t in_all = 0;
    for (const Complex& z : sorted) {
      eigs.push_back(to_json(z));
      const bool everywhere = std::all_of(
          regions.begin(), regions.end(),
          [&](const InclusionRegion& r) { return region_contains(r, z, 1e-8); });
      member.push_back(everywhere);
      if (everywhere) ++in_all;
    }
    doc["eigenvalues"] = std::move(eigs);
    doc["intersection"] =
        Json{{"all_contained", in_all == sorted.size()}, {"contained_in_all", in_all},
             {"per_eigenvalue", std::move(member)}};

    if (!out.csv_path.empty()) {
      std::ostringstream csv;
      write_eigenvalues_csv(csv, oracle->values);
      write_text(out.csv_path, csv.str());
    }
  } else if (!out.csv_path.empty()) {
    throw precondition_error("--csv requires --verify on the compare command");
  }

  emit_json(doc, out.json_path);
  return verify && !all_contained ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue inclusion regions for matrix polynomials"};
  app.require_subcommand(1);

  ProblemOptions popt;
  OutputOptions out;
  std::string basis_name = "power";
  std::vector<std::string> basis_names;
  std::string nodes_arg;
  std::vector<std::string> nodes_args;
  std::string norm_name = "one";
  bool verify = false;
  std::uint64_t seed = 2026;

  CLI::App* region_cmd =
      app.add_subcommand("region", "Compute an inclusion region and its component counts");
  add_problem_flags(*region_cmd, popt);
  region_cmd->add_option("--basis", basis_name,
                         "Basis: power, newton, quadratic-general, generic (default power)")
      ->check(CLI::IsMember({"power", "newton", "quadratic-general", "generic"}));
  region_cmd->add_option("--nodes", nodes_arg, "Basis nodes as JSON, overrides the recipe");
  region_cmd->add_option("--norm", norm_name, "Matrix norm: one, inf (default one)")
      ->check(CLI::IsMember({"one", "inf"}));
  region_cmd->add_flag("--verify", verify, "Check the region against the eigenvalue oracle");
  region_cmd->add_option("--json", out.json_path, "Write the region JSON here (default stdout)");
  region_cmd->add_option("--csv", out.csv_path, "With --verify: eigenvalue CSV path");
  region_cmd->add_option("--svg", out.svg_path, "Write a region picture here");
  region_cmd->add_option("--seed", seed, "Sampler seed for generic-basis validation");

  CLI::App* eigs_cmd = app.add_subcommand("eigs", "Oracle eigenvalues as CSV (degree*size <= 1000)");
  add_problem_flags(*eigs_cmd, popt);
  eigs_cmd->add_option("--csv", out.csv_path, "Write the CSV here (default stdout)");
  eigs_cmd->add_option("--json", out.json_path, "Also write an eigenvalue JSON document");

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Regions for several bases side by side, plus the reversal");
  add_problem_flags(*compare_cmd, popt);
  compare_cmd->add_option("--basis", basis_names, "Basis per region (repeatable)")
      ->required()
      ->check(CLI::IsMember({"power", "newton", "quadratic-general", "generic"}));
  compare_cmd->add_option("--nodes", nodes_args,
                          "Basis nodes as JSON, positional with --basis (repeatable)");
  compare_cmd->add_option("--norm", norm_name, "Matrix norm: one, inf (default one)")
      ->check(CLI::IsMember({"one", "inf"}));
  compare_cmd->add_flag("--verify", verify,
                        "Verify every region and report per-eigenvalue intersection membership");
  compare_cmd->add_option("--json", out.json_path, "Write the summary here (default stdout)");
  compare_cmd->add_option("--csv", out.csv_path, "With --verify: eigenvalue CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (region_cmd->parsed())
      return run_region(popt, basis_name, nodes_arg, norm_name, verify, out, seed);
    if (eigs_cmd->parsed()) return run_eigs(popt, out);
    return run_compare(popt, basis_names, nodes_args, norm_name, verify, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
