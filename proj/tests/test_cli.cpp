#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mpbounds/serialize.hpp"

using namespace mpbounds;

namespace {

namespace fs = std::filesystem;

const std::string& cli_path() {
  static const std::string path = MPB_CLI_PATH;
  return path;
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "mpbounds_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const fs::path err_file = work_dir() / "stderr.txt";
  const std::string cmd =
      cli_path() + " " + args + " > " + out_file.string() + " 2> " + err_file.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("region command reproduces the three-disk split", "[cli]") {
  const fs::path json = work_dir() / "region.json";
  const auto r = run_cli(
      "region --family mass-spring --m 50 --tau 1 --kappa 8 --basis quadratic-general "
      "--verify --json " +
      json.string());
  INFO(r.err);
  REQUIRE(r.exit_code == 0);

  const Json doc = Json::parse(slurp(json));
  REQUIRE(doc.at("predicted_counts") == Json::array({0, 50, 50}));
  REQUIRE(doc.at("verification").at("contained") == true);
  REQUIRE(doc.at("verification").at("counts_match") == "match");
  REQUIRE(std::abs(doc.at("gamma").get<double>() - 16.0 / std::sqrt(87.0)) < 1e-12);

  // The region fields round-trip through the library parser byte for byte.
  Json bare = doc;
  bare.erase("verification");
  REQUIRE(to_json(region_from_json(bare)).dump(2) == bare.dump(2));
}

TEST_CASE("identical invocations give identical bytes", "[cli]") {
  const fs::path a = work_dir() / "det_a.json";
  const fs::path b = work_dir() / "det_b.json";
  const std::string args =
      "compare --family mass-spring --m 20 --tau 10 --kappa 5 --basis power --basis newton "
      "--basis quadratic-general --verify --json ";
  REQUIRE(run_cli(args + a.string()).exit_code == 0);
  REQUIRE(run_cli(args + b.string()).exit_code == 0);
  const std::string bytes = slurp(a);
  REQUIRE(bytes == slurp(b));
  REQUIRE_FALSE(bytes.empty());

  const Json doc = Json::parse(bytes);
  REQUIRE(doc.at("regions").size() == 3);
  REQUIRE(doc.at("intersection").at("all_contained") == true);
  REQUIRE(doc.at("reversal_r_min").get<double>() > 0.0);
  // Real nodes at tau=10, kappa=5 leave gamma just above 1.
  REQUIRE(doc.at("regions")[2].at("region").at("gamma").get<double>() - 1.0 <= 1e-3);
}

TEST_CASE("eigs command emits sorted csv", "[cli]") {
  // I z^2 - I over C^2: eigenvalues -1, -1, 1, 1.
  const auto coeffs = write_file(
      "iz2.json",
      R"({"coefficients": [[[[-1,0],[0,0]],[[0,0],[-1,0]]], [[[0,0],[0,0]],[[0,0],[0,0]]], [[[1,0],[0,0]],[[0,0],[1,0]]]]})");
  const auto r = run_cli("eigs --coeffs " + coeffs.string());
  INFO(r.err);
  REQUIRE(r.exit_code == 0);

  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  REQUIRE(line == "re,im");
  std::vector<Complex> values;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    values.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  REQUIRE(values.size() == 4);
  REQUIRE(std::abs(values[0] - Complex(-1.0)) < 1e-12);
  REQUIRE(std::abs(values[1] - Complex(-1.0)) < 1e-12);
  REQUIRE(std::abs(values[2] - Complex(1.0)) < 1e-12);
  REQUIRE(std::abs(values[3] - Complex(1.0)) < 1e-12);
  for (std::size_t i = 1; i < values.size(); ++i)
    REQUIRE(values[i - 1].real() <= values[i].real());
}

TEST_CASE("eigs resolves a scalar quadratic to its conjugate pair", "[cli]") {
  // z^2 + 3z + 24 has roots -1.5 +- i*sqrt(87)/2.
  const auto coeffs = write_file(
      "scalar.json", R"({"coefficients": [[[[24,0]]], [[[3,0]]], [[[1,0]]]]})");
  const auto r = run_cli("eigs --coeffs " + coeffs.string());
  INFO(r.err);
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::vector<Complex> values;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    values.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  REQUIRE(values.size() == 2);
  const double s87 = std::sqrt(87.0) / 2.0;
  const Complex up(-1.5, s87), down(-1.5, -s87);
  const double paired = std::min(std::abs(values[0] - up) + std::abs(values[1] - down),
                                 std::abs(values[0] - down) + std::abs(values[1] - up));
  REQUIRE(paired < 1e-12);
}

TEST_CASE("eigs command refuses oversized sweeps", "[cli]") {
  const auto r = run_cli("eigs --family acoustic --ell 33");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.err.find("refusing") != std::string::npos);
}

TEST_CASE("singular leading coefficient fails cleanly", "[cli]") {
  const auto coeffs = write_file(
      "singular.json",
      R"({"coefficients": [[[[1,0],[0,0]],[[0,0],[1,0]]], [[[0,0],[0,0]],[[0,0],[0,0]]]]})");
  const auto r = run_cli("eigs --coeffs " + coeffs.string());
  REQUIRE(r.exit_code == 1);
  REQUIRE_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit with status one", "[cli]") {
  REQUIRE(run_cli("region --family no-such-family").exit_code == 1);
  REQUIRE(run_cli("frobnicate").exit_code == 1);
  REQUIRE(run_cli("region --family mass-spring --csv " +
                  (work_dir() / "no.csv").string())
              .exit_code == 1);
  REQUIRE(run_cli("region --family mass-spring --coeffs x.json").exit_code == 1);
}

TEST_CASE("explicit nodes override the recipe", "[cli]") {
  const fs::path json = work_dir() / "nodes.json";
  const auto r = run_cli(
      "region --family mass-spring --m 5 --tau 1 --kappa 8 --basis newton "
      "--nodes '[[-1.5,4.663689526544408],[-1.5,-4.663689526544408]]' --verify --svg " +
      (work_dir() / "nodes.svg").string() + " --json " + json.string());
  INFO(r.err);
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(slurp(json));
  REQUIRE(doc.at("disks").size() == 2);
  REQUIRE(doc.at("components").size() == 1);
  REQUIRE(std::abs(doc.at("rho").get<double>() - (1.0 + std::sqrt(17.0))) < 1e-10);

  const std::string svg = slurp(work_dir() / "nodes.svg");
  REQUIRE(svg.find("<svg") != std::string::npos);
  REQUIRE(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("generic basis is screened by the sampling check", "[cli]") {
  // Power basis in generic clothing: accepted.
  const std::string good =
      R"('{"variant":"generic","zeros":[[[0,0]],[[0,0],[0,0]]],"alphas":[[1.0],[0.0,1.0]],"gamma":1.0}')";
  const auto ok = run_cli("region --family mass-spring --m 3 --basis generic --nodes " + good);
  INFO(ok.err);
  REQUIRE(ok.exit_code == 0);
  REQUIRE(Json::parse(ok.out).at("basis_condition").at("holds") == true);

  // Same zeros with an understated alpha: the sampler must reject it.
  const std::string bad =
      R"('{"variant":"generic","zeros":[[[0,0]],[[0,0],[0,0]]],"alphas":[[1.0],[0.0,0.4]],"gamma":1.0}')";
  const auto fail = run_cli("region --family mass-spring --m 3 --basis generic --nodes " + bad);
  REQUIRE(fail.exit_code == 1);
  REQUIRE(fail.err.find("basis condition") != std::string::npos);
}
