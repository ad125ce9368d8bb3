#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "teldq/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Differential-quadrature solver for the 2-D telegraph equation"};
  app.require_subcommand(1);

  teldq::RunConfig cfg;

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--nx", cfg.nx, "nodes in x (>= 3)");
    sub->add_option("--ny", cfg.ny, "nodes in y (>= 3)");
    sub->add_option("--out", cfg.out_dir,
                    "output directory (TELDQ_OUT_DIR overrides)");
    sub->add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--alpha", [&cfg](const std::vector<std::string>& v) {
          cfg.alpha = std::stod(v.at(0));
          return true;
        }, "damping coefficient override");
    sub->add_option("--beta", [&cfg](const std::vector<std::string>& v) {
          cfg.beta = std::stod(v.at(0));
          return true;
        }, "reaction coefficient override");
  };

  CLI::App* solve = app.add_subcommand("solve", "integrate one problem and emit surfaces");
  add_common(solve);
  solve->add_option("--problem", cfg.problem, "catalog id 1..6 or problem file");
  solve->add_option("--dt", cfg.dt, "time step");
  solve->add_option("--scheme", cfg.scheme, "rk43 or rk54")
      ->check(CLI::IsMember({"rk43", "rk54"}));
  solve->add_option("--times", cfg.times, "snapshot times (ascending)")->delimiter(',');
  solve->add_flag("--dump-weights", cfg.dump_weights, "also dump weight matrices");

  CLI::App* bench = app.add_subcommand("bench", "error-norm table for a problem sweep");
  add_common(bench);
  bench->add_option("--problem", cfg.problem, "catalog id 1..6, problem file, or 'all'");
  bench->add_option("--dt", cfg.dt, "time step");
  bench->add_option("--scheme", cfg.scheme, "rk43, rk54 or both")
      ->check(CLI::IsMember({"rk43", "rk54", "both"}));
  bench->add_option("--times", cfg.times, "report times (ascending)")->delimiter(',');
  bench->add_flag("--dump-weights", cfg.dump_weights, "also dump weight matrices");

  CLI::App* stability = app.add_subcommand("stability", "spectra and stability verdicts");
  add_common(stability);
  stability->add_option("--grids", cfg.grids, "grid sizes to analyze")->delimiter(',');

  CLI::App* weights = app.add_subcommand("weights", "dump quadrature weight matrices");
  add_common(weights);

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) cfg.command = teldq::RunConfig::Command::solve;
  if (bench->parsed()) cfg.command = teldq::RunConfig::Command::bench;
  if (stability->parsed()) cfg.command = teldq::RunConfig::Command::stability;
  if (weights->parsed()) cfg.command = teldq::RunConfig::Command::weights;

  try {
    return teldq::run_command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
