#include "teldq/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "teldq/benchmarks.hpp"
#include "teldq/expression.hpp"
#include "teldq/io.hpp"
#include "teldq/ssprk.hpp"
#include "teldq/stability.hpp"

namespace teldq {

namespace {

Scheme parse_scheme(const std::string& s) {
  if (s == "rk43") return Scheme::rk43;
  if (s == "rk54") return Scheme::rk54;
  throw std::invalid_argument("unknown scheme '" + s + "' (expected rk43 or rk54)");
}

bool is_catalog_id(const std::string& spec) {
  return !spec.empty() &&
         std::all_of(spec.begin(), spec.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string problem_tag(const std::string& spec) {
  if (is_catalog_id(spec)) return "p" + spec;
  return std::filesystem::path(spec).stem().string();
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

EdgeSpec edge_from_json(const nlohmann::json& j, double fixed_coord, bool x_edge) {
  EdgeSpec e;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dirichlet") {
    e.kind = EdgeKind::dirichlet;
  } else if (kind == "neumann") {
    e.kind = EdgeKind::neumann;
  } else {
    throw std::invalid_argument("edge kind must be dirichlet or neumann, got '" +
                                kind + "'");
  }
  const Expression expr = parse_expression(j.at("trace").get<std::string>());
  if (x_edge) {
    e.data = [expr, fixed_coord](double coord, double t) {
      return expr.eval(fixed_coord, coord, t);
    };
  } else {
    e.data = [expr, fixed_coord](double coord, double t) {
      return expr.eval(coord, fixed_coord, t);
    };
  }
  return e;
}

TelegraphProblem problem_from_file(const std::string& path, std::optional<double> alpha,
                                   std::optional<double> beta) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file " + path);
  nlohmann::json j;
  in >> j;

  TelegraphProblem p;
  p.name = j.value("name", std::filesystem::path(path).stem().string());
  p.alpha = alpha.value_or(j.at("alpha").get<double>());
  p.beta = beta.value_or(j.at("beta").get<double>());
  if (!(p.alpha > 0)) throw std::invalid_argument("problem needs alpha > 0");

  const Expression f = parse_expression(j.at("f").get<std::string>());
  p.f = [f](double x, double y, double t) { return f.eval(x, y, t); };
  const Expression phi = parse_expression(j.at("phi").get<std::string>());
  p.phi = [phi](double x, double y) { return phi.eval(x, y, 0.0); };
  const Expression psi = parse_expression(j.at("psi").get<std::string>());
  p.psi = [psi](double x, double y) { return psi.eval(x, y, 0.0); };
  if (j.contains("exact")) {
    const Expression exact = parse_expression(j.at("exact").get<std::string>());
    p.exact = [exact](double x, double y, double t) { return exact.eval(x, y, t); };
  }

  const auto& bc = j.at("bc");
  p.bc.x_lo = edge_from_json(bc.at("x_lo"), 0.0, /*x_edge=*/true);
  p.bc.x_hi = edge_from_json(bc.at("x_hi"), 1.0, /*x_edge=*/true);
  p.bc.y_lo = edge_from_json(bc.at("y_lo"), 0.0, /*x_edge=*/false);
  p.bc.y_hi = edge_from_json(bc.at("y_hi"), 1.0, /*x_edge=*/false);
  return p;
}

std::vector<double> sorted_times(const RunConfig& cfg) {
  std::vector<double> times = cfg.times;
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("snapshot times must be ascending");
  }
  return times;
}

void dump_weight_set(const RunConfig& cfg, const Grid2D& grid, const WeightSet& w,
                     const std::string& dir) {
  const std::string suffix =
      "_n" + std::to_string(grid.gx.n) + "x" + std::to_string(grid.gy.n);
  write_matrix(dir + "/weights_x1" + suffix, cfg.format, w.a1w);
  write_matrix(dir + "/weights_x2" + suffix, cfg.format, w.a2w);
  write_matrix(dir + "/weights_y1" + suffix, cfg.format, w.b1w);
  write_matrix(dir + "/weights_y2" + suffix, cfg.format, w.b2w);
}

std::vector<std::string> error_row(const TelegraphProblem& p, const ErrorReport& r) {
  return {p.name.substr(0, p.name.find(':')),
          r.scheme,
          r.grid_label,
          format_float(r.h),
          format_float(r.dt),
          format_float(r.t),
          format_float(r.l2),
          format_float(r.linf),
          r.re_defined ? format_float(r.re) : "undefined"};
}

const std::vector<std::string> kErrorColumns = {
    "problem", "scheme", "grid", "h", "dt", "t", "l2", "linf", "re"};

}  // namespace

TelegraphProblem load_problem(const std::string& spec, std::optional<double> alpha,
                              std::optional<double> beta) {
  if (is_catalog_id(spec)) {
    return make_problem(std::stoi(spec), alpha, beta);
  }
  return problem_from_file(spec, alpha, beta);
}

std::string resolve_out_dir(const RunConfig& cfg) {
  std::string dir = cfg.out_dir;
  if (const char* env = std::getenv(kOutDirEnvVar); env && *env) dir = env;
  if (dir.empty()) dir = ".";
  std::filesystem::create_directories(dir);
  return dir;
}

int cmd_solve(const RunConfig& cfg) {
  const TelegraphProblem problem = load_problem(cfg.problem, cfg.alpha, cfg.beta);
  const Grid2D grid = make_grid(cfg.nx, cfg.ny);
  const WeightSet w = make_weights(grid);
  const std::string dir = resolve_out_dir(cfg);
  const std::string tag = problem_tag(cfg.problem);

  if (cfg.dump_weights) dump_weight_set(cfg, grid, w, dir);

  std::vector<double> times = sorted_times(cfg);
  if (times.empty()) times = {0.0};

  StepConfig step;
  step.dt = cfg.dt;
  step.scheme = parse_scheme(cfg.scheme);
  step.t_end = times.back();

  Table errors;
  errors.columns = kErrorColumns;

  const auto snapshot = [&](const State& s) {
    Table surface;
    surface.columns = {"x", "y", "u"};
    if (problem.exact) {
      surface.columns.push_back("exact");
      surface.columns.push_back("abs_error");
    }
    for (int i = 0; i < grid.gx.n; ++i) {
      for (int j = 0; j < grid.gy.n; ++j) {
        std::vector<std::string> row = {format_float(grid.gx.nodes[i]),
                                        format_float(grid.gy.nodes[j]),
                                        format_float(s.u(i, j))};
        if (problem.exact) {
          const double ue = (*problem.exact)(grid.gx.nodes[i], grid.gy.nodes[j], s.t);
          row.push_back(format_float(ue));
          row.push_back(format_float(std::abs(ue - s.u(i, j))));
        }
        surface.rows.push_back(std::move(row));
      }
    }
    write_table(dir + "/surface_" + tag + "_t" + time_tag(s.t), cfg.format, surface);

    if (problem.exact) {
      Eigen::MatrixXd ue(grid.gx.n, grid.gy.n);
      for (int i = 0; i < grid.gx.n; ++i) {
        for (int j = 0; j < grid.gy.n; ++j) {
          ue(i, j) = (*problem.exact)(grid.gx.nodes[i], grid.gy.nodes[j], s.t);
        }
      }
      ErrorReport r = error_norms(s.u, ue, grid.gx.h);
      r.t = s.t;
      r.dt = cfg.dt;
      r.scheme = scheme_name(step.scheme);
      r.grid_label = std::to_string(grid.gx.n) + "x" + std::to_string(grid.gy.n);
      errors.rows.push_back(error_row(problem, r));
      std::cout << problem.name << " t=" << time_tag(s.t) << " L2=" << format_float(r.l2)
                << " Linf=" << format_float(r.linf)
                << " Re=" << (r.re_defined ? format_float(r.re) : "undefined") << "\n";
    } else {
      std::cout << problem.name << " t=" << time_tag(s.t) << " surface written\n";
    }
  };

  const State s0 = initial_state(problem, grid);
  integrate(s0, problem, grid, w, step, times, snapshot);

  if (problem.exact) {
    write_table(dir + "/solve_errors_" + tag, cfg.format, errors);
  }
  return 0;
}

int cmd_bench(const RunConfig& cfg) {
  const std::string dir = resolve_out_dir(cfg);
  const std::vector<double> times = sorted_times(cfg);

  std::vector<std::string> problem_specs;
  if (cfg.problem == "all") {
    for (int id = 1; id <= kProblemCount; ++id) problem_specs.push_back(std::to_string(id));
  } else {
    problem_specs.push_back(cfg.problem);
  }

  std::vector<Scheme> schemes;
  if (cfg.scheme == "both") {
    schemes = {Scheme::rk54, Scheme::rk43};
  } else {
    schemes = {parse_scheme(cfg.scheme)};
  }

  const Grid2D grid = make_grid(cfg.nx, cfg.ny);
  if (cfg.dump_weights) dump_weight_set(cfg, grid, make_weights(grid), dir);

  Table table;
  table.columns = kErrorColumns;

  for (const auto& spec : problem_specs) {
    const TelegraphProblem problem = load_problem(spec, cfg.alpha, cfg.beta);
    // rows per scheme, interleaved per time so paired columns line up
    std::vector<std::vector<std::vector<std::string>>> per_scheme;
    for (const Scheme scheme : schemes) {
      StepConfig step;
      step.dt = cfg.dt;
      step.scheme = scheme;
      step.t_end = times.empty() ? 0.0 : times.back();
      std::vector<std::vector<std::string>> rows;
      try {
        for (const ErrorReport& r : run_benchmark(problem, grid, step, times)) {
          rows.push_back(error_row(problem, r));
        }
      } catch (const std::exception& e) {
        // partial-failure policy: keep the sweep going, record the reason
        rows.clear();
        for (const double t : times) {
          const std::string fail = "FAIL(" + std::string(e.what()) + ")";
          rows.push_back({problem.name.substr(0, problem.name.find(':')),
                          scheme_name(scheme),
                          std::to_string(grid.gx.n) + "x" + std::to_string(grid.gy.n),
                          format_float(grid.gx.h), format_float(cfg.dt),
                          format_float(t), fail, fail, fail});
        }
      }
      per_scheme.push_back(std::move(rows));
    }
    const size_t nrows = per_scheme.empty() ? 0 : per_scheme.front().size();
    for (size_t k = 0; k < nrows; ++k) {
      for (auto& rows : per_scheme) {
        if (k < rows.size()) table.rows.push_back(std::move(rows[k]));
      }
    }
  }

  write_table(dir + "/bench_" + problem_tag(cfg.problem), cfg.format, table);
  std::cout << "wrote " << table.rows.size() << " benchmark rows\n";
  return 0;
}

int cmd_stability(const RunConfig& cfg) {
  const std::string dir = resolve_out_dir(cfg);
  const double alpha = cfg.alpha.value_or(1.0);
  const double beta = cfg.beta.value_or(1.0);

  Table summary;
  summary.columns = {"grid",           "alpha",
                     "beta",           "pass",
                     "max_re_lambda_b", "max_abs_im_lambda_b",
                     "max_re_lambda_a", "max_abs_lambda_a",
                     "dense_checked",  "dense_max_mismatch"};

  for (const int g : cfg.grids) {
    const Grid2D grid = make_grid(g, g);
    const WeightSet w = make_weights(grid);
    const StabilityReport rep = stability_report(w, grid, alpha, beta);

    Table spectrum;
    spectrum.columns = {"set", "re", "im"};
    const auto add_set = [&spectrum](const char* name, const SpectrumReport& r) {
      for (const auto& z : r.eigenvalues) {
        spectrum.rows.push_back({name, format_float(z.real()), format_float(z.imag())});
      }
    };
    add_set("lambda_x", rep.lambda_x);
    add_set("lambda_y", rep.lambda_y);
    add_set("lambda_b", rep.lambda_b);
    add_set("lambda_a", rep.lambda_a);
    write_table(dir + "/spectrum_n" + std::to_string(g), cfg.format, spectrum);

    summary.rows.push_back(
        {rep.lambda_b.grid_label, format_float(alpha), format_float(beta),
         rep.pass ? "pass" : "fail", format_float(rep.lambda_b.max_real),
         format_float(rep.lambda_b.max_abs_imag), format_float(rep.lambda_a.max_real),
         format_float(rep.max_abs_lambda_a), rep.dense_checked ? "yes" : "no",
         format_float(rep.dense_max_mismatch)});

    std::cout << "grid " << rep.lambda_b.grid_label << ": "
              << (rep.pass ? "PASS" : "FAIL")
              << " max Re(lambda_b)=" << format_float(rep.lambda_b.max_real)
              << " max |Im(lambda_b)|=" << format_float(rep.lambda_b.max_abs_imag)
              << " max Re(lambda_a)=" << format_float(rep.lambda_a.max_real)
              << " max |lambda_a|=" << format_float(rep.max_abs_lambda_a) << "\n";
  }

  write_table(dir + "/stability_summary", cfg.format, summary);
  return 0;
}

int cmd_weights(const RunConfig& cfg) {
  const Grid2D grid = make_grid(cfg.nx, cfg.ny);
  const WeightSet w = make_weights(grid);
  dump_weight_set(cfg, grid, w, resolve_out_dir(cfg));
  std::cout << "wrote weight matrices for " << cfg.nx << "x" << cfg.ny << " grid\n";
  return 0;
}

int run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case RunConfig::Command::solve: return cmd_solve(cfg);
    case RunConfig::Command::bench: return cmd_bench(cfg);
    case RunConfig::Command::stability: return cmd_stability(cfg);
    case RunConfig::Command::weights: return cmd_weights(cfg);
  }
  return 1;
}

}  // namespace teldq
