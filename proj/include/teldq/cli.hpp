#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teldq/telegraph.hpp"

namespace teldq {

/// Name of the environment variable that overrides the output directory.
inline constexpr const char* kOutDirEnvVar = "TELDQ_OUT_DIR";

struct RunConfig {
  enum class Command { solve, bench, stability, weights };
  Command command = Command::solve;

  std::string problem = "4";  // catalog id 1..6 or path of a problem file
  int nx = 11;
  int ny = 11;
  double dt = 0.01;
  std::string scheme = "rk43";  // rk43 | rk54 | both (bench only)
  std::vector<double> times = {1.0};
  std::string out_dir = ".";
  std::string format = "csv";  // csv | json
  bool dump_weights = false;
  std::optional<double> alpha;  // override for problems 5/6 and custom runs
  std::optional<double> beta;
  std::vector<int> grids = {11, 21, 31, 41};  // stability sweep
};

/// Catalog id ("1".."6") or a JSON problem file (see README for the schema;
/// closed forms are expression strings over x, y, t).
TelegraphProblem load_problem(const std::string& spec, std::optional<double> alpha,
                              std::optional<double> beta);

/// The directory all output files land in: the environment override when
/// set, otherwise cfg.out_dir. Created if missing.
std::string resolve_out_dir(const RunConfig& cfg);

int cmd_solve(const RunConfig& cfg);
int cmd_bench(const RunConfig& cfg);
int cmd_stability(const RunConfig& cfg);
int cmd_weights(const RunConfig& cfg);

/// Dispatch on cfg.command. Exceptions propagate to the caller.
int run_command(const RunConfig& cfg);

}  // namespace teldq
