#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "teldq/cli.hpp"
#include "teldq/io.hpp"

using namespace teldq;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

size_t line_count(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "teldq_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("float format uses ten significant digits") {
  CHECK(format_float(0.1) == "1.000000000e-01");
  CHECK(format_float(-12345.678) == "-1.234567800e+04");
}

TEST_CASE("solve writes one surface row per node plus an error row") {
  const fs::path dir = fresh_dir("solve");
  RunConfig cfg;
  cfg.command = RunConfig::Command::solve;
  cfg.problem = "4";
  cfg.nx = cfg.ny = 11;
  cfg.dt = 0.01;
  cfg.times = {1.0};
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);

  const std::string surface = slurp(dir / "surface_p4_t1.csv");
  CHECK(line_count(surface) == 122);  // header + 121 nodes
  const std::string errors = slurp(dir / "solve_errors_p4.csv");
  CHECK(line_count(errors) == 2);  // header + one snapshot
  CHECK(errors.find("rk43") != std::string::npos);
}

TEST_CASE("solve at t_end = 0 emits the sampled initial data") {
  const fs::path dir = fresh_dir("solve0");
  RunConfig cfg;
  cfg.command = RunConfig::Command::solve;
  cfg.problem = "4";
  cfg.nx = cfg.ny = 5;
  cfg.times = {0.0};
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);
  const std::string surface = slurp(dir / "surface_p4_t0.csv");
  // initial data equals the exact solution, so the error column is zero
  std::istringstream in(surface);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto last = line.rfind(',');
    CHECK(std::stod(line.substr(last + 1)) == 0.0);
  }
}

TEST_CASE("bench: two schemes and six times give twelve rows") {
  const fs::path dir = fresh_dir("bench");
  RunConfig cfg;
  cfg.command = RunConfig::Command::bench;
  cfg.problem = "4";
  cfg.nx = cfg.ny = 11;
  cfg.dt = 0.01;
  cfg.scheme = "both";
  cfg.times = {0.25, 0.5, 1.0, 1.25, 1.5, 2.0};
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);
  const std::string table = slurp(dir / "bench_p4.csv");
  CHECK(line_count(table) == 13);  // header + 12 rows
  // paired layout: the two schemes alternate per time
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  int row = 0;
  while (std::getline(in, line)) {
    const bool rk54_expected = (row % 2 == 0);
    CHECK(line.find(rk54_expected ? "rk54" : "rk43") != std::string::npos);
    ++row;
  }
}

TEST_CASE("bench with no times writes a header-only file") {
  const fs::path dir = fresh_dir("bench_empty");
  RunConfig cfg;
  cfg.command = RunConfig::Command::bench;
  cfg.problem = "4";
  cfg.times = {};
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);
  CHECK(line_count(slurp(dir / "bench_p4.csv")) == 1);
}

TEST_CASE("identical configurations produce byte-identical output") {
  const fs::path d1 = fresh_dir("det1");
  const fs::path d2 = fresh_dir("det2");
  for (const fs::path& dir : {d1, d2}) {
    RunConfig cfg;
    cfg.command = RunConfig::Command::bench;
    cfg.problem = "1";
    cfg.nx = cfg.ny = 11;
    cfg.dt = 0.01;
    cfg.scheme = "both";
    cfg.times = {0.5, 1.0};
    cfg.out_dir = dir.string();
    REQUIRE(run_command(cfg) == 0);
  }
  CHECK(slurp(d1 / "bench_p1.csv") == slurp(d2 / "bench_p1.csv"));
}

TEST_CASE("json format mirrors the csv rows") {
  const fs::path dir = fresh_dir("json");
  RunConfig cfg;
  cfg.command = RunConfig::Command::bench;
  cfg.problem = "4";
  cfg.times = {1.0};
  cfg.format = "json";
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);
  const std::string body = slurp(dir / "bench_p4.json");
  CHECK(body.find("\"linf\"") != std::string::npos);
  CHECK(body.find("rk43") != std::string::npos);
}

TEST_CASE("custom problem files load through the expression grammar") {
  const fs::path dir = fresh_dir("custom");
  const fs::path file = dir / "wave.json";
  std::ofstream(file) << R"json({
    "name": "custom exp wave",
    "alpha": 1.0, "beta": 1.0,
    "f": "-2*exp(x+y-t)",
    "phi": "exp(x+y)",
    "psi": "-exp(x+y)",
    "exact": "exp(x+y-t)",
    "bc": {
      "x_lo": {"kind": "dirichlet", "trace": "exp(y-t)"},
      "x_hi": {"kind": "dirichlet", "trace": "exp(1+y-t)"},
      "y_lo": {"kind": "neumann",   "trace": "exp(x-t)"},
      "y_hi": {"kind": "dirichlet", "trace": "exp(1+x-t)"}
    }
  })json";

  const TelegraphProblem p = load_problem(file.string(), {}, {});
  CHECK(p.name == "custom exp wave");
  CHECK(p.bc.y_lo.kind == EdgeKind::neumann);
  CHECK(p.f(0, 0, 0) == doctest::Approx(-2.0));
  CHECK(p.bc.x_hi.data(0.5, 0.25) == doctest::Approx(std::exp(1 + 0.5 - 0.25)));

  // the file-based problem solves identically to catalog problem 1
  RunConfig cfg;
  cfg.command = RunConfig::Command::solve;
  cfg.problem = file.string();
  cfg.nx = cfg.ny = 11;
  cfg.dt = 0.01;
  cfg.times = {1.0};
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);

  RunConfig ref = cfg;
  ref.problem = "1";
  CHECK(run_command(ref) == 0);
  CHECK(slurp(dir / "surface_wave_t1.csv").substr(10) ==
        slurp(dir / "surface_p1_t1.csv").substr(10));
}

TEST_CASE("environment variable overrides the output directory") {
  const fs::path dir = fresh_dir("envdir");
  const fs::path decoy = fresh_dir("envdir_decoy");
  setenv(kOutDirEnvVar, dir.string().c_str(), 1);
  RunConfig cfg;
  cfg.command = RunConfig::Command::weights;
  cfg.nx = cfg.ny = 5;
  cfg.out_dir = decoy.string();
  const int rc = run_command(cfg);
  unsetenv(kOutDirEnvVar);
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "weights_x1_n5x5.csv"));
  CHECK_FALSE(fs::exists(decoy / "weights_x1_n5x5.csv"));
}

TEST_CASE("weight dump writes all four matrices") {
  const fs::path dir = fresh_dir("weights");
  RunConfig cfg;
  cfg.command = RunConfig::Command::weights;
  cfg.nx = 7;
  cfg.ny = 9;
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);
  for (const char* name : {"weights_x1_n7x9.csv", "weights_x2_n7x9.csv",
                           "weights_y1_n7x9.csv", "weights_y2_n7x9.csv"}) {
    CHECK(fs::exists(dir / name));
  }
  CHECK(line_count(slurp(dir / "weights_x1_n7x9.csv")) == 8);   // header + 7 rows
  CHECK(line_count(slurp(dir / "weights_y1_n7x9.csv")) == 10);  // header + 9 rows
}

TEST_CASE("stability command emits spectra and a summary") {
  const fs::path dir = fresh_dir("stability");
  RunConfig cfg;
  cfg.command = RunConfig::Command::stability;
  cfg.grids = {7, 9};
  cfg.out_dir = dir.string();
  CHECK(run_command(cfg) == 0);
  CHECK(fs::exists(dir / "spectrum_n7.csv"));
  CHECK(fs::exists(dir / "spectrum_n9.csv"));
  const std::string summary = slurp(dir / "stability_summary.csv");
  CHECK(line_count(summary) == 3);
  CHECK(summary.find("pass") != std::string::npos);
  // spectrum rows: lambda_x and lambda_y (n-2 each), lambda_b ((n-2)^2),
  // lambda_a (2 (n-2)^2)
  CHECK(line_count(slurp(dir / "spectrum_n7.csv")) == 1 + 5 + 5 + 25 + 50);
}

TEST_CASE("unknown problem ids raise the catalog range") {
  RunConfig cfg;
  cfg.command = RunConfig::Command::solve;
  cfg.problem = "9";
  CHECK_THROWS_WITH_AS(run_command(cfg), doctest::Contains("valid ids are 1..6"),
                       std::invalid_argument);
}

}  // TEST_SUITE
