#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "semiwig/cli.hpp"
#include "semiwig/error.hpp"
#include "semiwig/io.hpp"
#include "semiwig/scenario.hpp"

using namespace semiwig;
namespace fs = std::filesystem;

namespace {
const double pi = std::acos(-1.0);

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("semiwig_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "semiwig");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path write_config(const fs::path& dir, const nlohmann::json& j) {
  fs::path p = dir / "scenario.json";
  std::ofstream(p) << j.dump(2);
  return p;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}
}  // namespace

TEST_CASE("numbers keep 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  for (double v : {pi, -1e-300, 6.02214076e23, 1.0 / 3.0}) CHECK(std::stod(format_number(v)) == v);
  CsvTable t({"a", "b"});
  t.row(std::vector<double>{1.0, 2.5});
  CHECK(t.text() == "a,b\n1,2.5\n");
  CHECK_THROWS_AS(t.row(std::vector<double>{1.0}), Error);
}

TEST_CASE("scenario round trip is idempotent") {
  Scenario s;
  s.eps = 0.25;
  s.modes = {0, 3};
  s.datum = DatumSpec{"gaussian", "custom", 0.5, 0.3, {0.0, 1.0, -0.5}};
  s.times = {0.0, 0.5};
  nlohmann::json j = to_json(s);
  CHECK(to_json(scenario_from_json(j)) == j);
  nlohmann::json bad = j;
  bad["colour"] = "red";
  CHECK_THROWS_AS(scenario_from_json(bad), Error);
  bad = j;
  bad["eps"] = 2.0;
  CHECK_THROWS_AS(scenario_from_json(bad).validate(), Error);
}

TEST_CASE("atomic write leaves no temporary behind") {
  fs::path dir = scratch("atomic");
  atomic_write(dir / "x.txt", "first");
  atomic_write(dir / "x.txt", "second");
  CHECK(slurp(dir / "x.txt") == "second");
  int files = 0;
  for (auto& e : fs::directory_iterator(dir)) files += e.is_regular_file() ? 1 : 0;
  CHECK(files == 1);
  fs::remove_all(dir);
}

TEST_CASE("eigen writes the ground state wigner function") {
  fs::path dir = scratch("eigen");
  const double eps = 0.5;
  nlohmann::json cfg = {{"eps", eps}, {"modes", {0}}, {"grid", {{"x_min", -2}, {"x_max", 2}, {"p_min", -2}, {"p_max", 2}, {"nx", 9}, {"np", 9}}}};
  fs::path conf = write_config(dir, cfg);
  REQUIRE(run({"eigen", "--config", conf.string(), "--out", (dir / "a").string()}) == 0);
  auto rows = read_csv(dir / "a" / "run_n0_wigner_exact.csv");
  REQUIRE(rows.size() == 82);
  CHECK(rows[0] == std::vector<std::string>{"x", "p", "re", "im"});
  double best = 1e300, value = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double r = std::hypot(std::stod(rows[i][0]), std::stod(rows[i][1]));
    if (r < best) best = r, value = std::stod(rows[i][2]);
  }
  CHECK(value == doctest::Approx(1.0 / (pi * eps)).epsilon(1e-12));
  CHECK(fs::exists(dir / "a" / "run_n0_wigner_exact.meta.json"));
  auto meta = nlohmann::json::parse(slurp(dir / "a" / "run_n0_wigner_exact.meta.json"));
  CHECK(meta["rows"] == 81);

  // same scenario, same bytes
  REQUIRE(run({"eigen", "--config", conf.string(), "--out", (dir / "b").string()}) == 0);
  for (auto& e : fs::directory_iterator(dir / "a")) CHECK(slurp(e.path()) == slurp(dir / "b" / e.path().filename()));
  fs::remove_all(dir);
}

TEST_CASE("solve writes the full coefficient matrix") {
  fs::path dir = scratch("solve");
  nlohmann::json cfg = {{"eps", 0.2},
                        {"n_max", 12},
                        {"datum", {{"amplitude", "gaussian"}, {"phase", "quad_plus"}, {"center", 0.3}, {"width", 0.4}}},
                        {"grid", {{"x_min", -3}, {"x_max", 3}, {"p_min", -3}, {"p_max", 3}, {"nx", 7}, {"np", 7}}},
                        {"times", {0.0, 1.0}}};
  fs::path conf = write_config(dir, cfg);
  REQUIRE(run({"solve", "--config", conf.string(), "--out", dir.string()}) == 0);
  auto rows = read_csv(dir / "run_coefficients.csv");
  CHECK(rows.size() == 1 + 13 * 13);
  CHECK(rows[1][4] == "exact-quadrature");
  CHECK(fs::exists(dir / "run_t1_field.csv"));
  CHECK(fs::exists(dir / "run_t1_amplitude.meta.json"));
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  fs::path dir = scratch("codes");
  CHECK(run({"frobnicate"}) == 2);
  CHECK(run({"eigen"}) == 2);
  CHECK(run({"eigen", "--config", (dir / "missing.json").string()}) == 2);
  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(run({"eigen", "--config", (dir / "broken.json").string()}) == 2);
  fs::path conf = write_config(dir, {{"eps", 0.1}, {"modes", {0}}});
  CHECK(run({"eigen", "--config", conf.string(), "--backend", "airy", "--out", dir.string()}) == 2);
  CHECK(run({"verify", "--suite", "nonsense", "--out", dir.string()}) == 2);
  CHECK(run({"verify", "--suite", "specfun", "--out", dir.string()}) == 0);
  // a perturbed Airy constant must be caught
  CHECK(run({"verify", "--suite", "specfun", "--perturb-airy", "1e-9", "--out", dir.string()}) == 1);
  std::ifstream rep(dir / "verify_report.jsonl");
  std::string line;
  int lines = 0;
  while (std::getline(rep, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("timestamp"));
    ++lines;
  }
  CHECK(lines == 4);
  fs::remove_all(dir);
}

TEST_CASE("installed binary behaves like the library front end") {
  fs::path dir = scratch("binary");
  std::string bin = SEMIWIG_CLI;
  auto code = [&](const std::string& args) {
    int st = std::system((bin + " " + args + " > " + (dir / "log").string() + " 2>&1").c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  CHECK(code("--help") == 0);
  CHECK(code("bogus") == 2);
  CHECK(code("verify --suite specfun --out " + dir.string()) == 0);
  fs::remove_all(dir);
}
