#include "teldq/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace teldq {

ErrorReport error_norms(const Eigen::MatrixXd& numeric, const Eigen::MatrixXd& exact,
                        double h) {
  if (numeric.rows() != exact.rows() || numeric.cols() != exact.cols()) {
    throw std::invalid_argument("error_norms: field shapes differ");
  }
  double sum_e2 = 0.0, sum_u2 = 0.0, max_e = 0.0;
  for (long i = 0; i < numeric.rows(); ++i) {
    for (long j = 0; j < numeric.cols(); ++j) {
      const double e = std::abs(exact(i, j) - numeric(i, j));
      sum_e2 += e * e;
      sum_u2 += exact(i, j) * exact(i, j);
      max_e = std::max(max_e, e);
    }
  }
  ErrorReport r;
  r.l2 = std::sqrt(h * sum_e2);
  r.linf = max_e;
  if (sum_u2 > 0.0) {
    r.re = std::sqrt(sum_e2 / sum_u2);
    r.re_defined = true;
  } else {
    r.re = std::numeric_limits<double>::quiet_NaN();
    r.re_defined = false;
  }
  r.h = h;
  return r;
}

namespace {

EdgeSpec dirichlet(TraceFn f) { return {EdgeKind::dirichlet, std::move(f)}; }
EdgeSpec neumann(TraceFn f) { return {EdgeKind::neumann, std::move(f)}; }

TelegraphProblem problem1() {
  TelegraphProblem p;
  p.name = "problem 1: exp(x+y-t), Neumann on y=0";
  p.alpha = 1.0;
  p.beta = 1.0;
  p.f = [](double x, double y, double t) { return -2.0 * std::exp(x + y - t); };
  p.phi = [](double x, double y) { return std::exp(x + y); };
  p.psi = [](double x, double y) { return -std::exp(x + y); };
  p.exact = [](double x, double y, double t) { return std::exp(x + y - t); };
  p.bc.x_lo = dirichlet([](double y, double t) { return std::exp(y - t); });
  p.bc.x_hi = dirichlet([](double y, double t) { return std::exp(1 + y - t); });
  p.bc.y_lo = neumann([](double x, double t) { return std::exp(x - t); });
  p.bc.y_hi = dirichlet([](double x, double t) { return std::exp(1 + x - t); });
  return p;
}

TelegraphProblem problem2() {
  constexpr double pi = std::numbers::pi;
  TelegraphProblem p;
  p.name = "problem 2: exp(-t)sin(pi x)sin(pi y), Neumann on x=0 and y=1";
  p.alpha = 1.0;
  p.beta = 1.0;
  p.f = [pi](double x, double y, double t) {
    return 2 * pi * pi * std::exp(-t) * std::sin(pi * x) * std::sin(pi * y);
  };
  p.phi = [pi](double x, double y) { return std::sin(pi * x) * std::sin(pi * y); };
  p.psi = [pi](double x, double y) { return -std::sin(pi * x) * std::sin(pi * y); };
  p.exact = [pi](double x, double y, double t) {
    return std::exp(-t) * std::sin(pi * x) * std::sin(pi * y);
  };
  p.bc.x_lo = neumann(
      [pi](double y, double t) { return pi * std::exp(-t) * std::sin(pi * y); });
  p.bc.x_hi = dirichlet([](double, double) { return 0.0; });
  p.bc.y_lo = dirichlet([](double, double) { return 0.0; });
  p.bc.y_hi = neumann(
      [pi](double x, double t) { return -pi * std::exp(-t) * std::sin(pi * x); });
  return p;
}

TelegraphProblem problem3() {
  TelegraphProblem p;
  p.name = "problem 3: log(1+x+y+t), Neumann on x=1 and y=0";
  p.alpha = 1.0;
  p.beta = 1.0;
  // Forcing from substituting the solution: u_tt = -1/s^2, u_t = 1/s,
  // u_xx = u_yy = -1/s^2 with s = 1 + x + y + t.
  p.f = [](double x, double y, double t) {
    const double s = 1 + x + y + t;
    return 1.0 / (s * s) + 2.0 / s + std::log(s);
  };
  p.phi = [](double x, double y) { return std::log(1 + x + y); };
  p.psi = [](double x, double y) { return 1.0 / (1 + x + y); };
  p.exact = [](double x, double y, double t) { return std::log(1 + x + y + t); };
  p.bc.x_lo = dirichlet([](double y, double t) { return std::log(1 + y + t); });
  p.bc.x_hi = neumann([](double y, double t) { return 1.0 / (2 + y + t); });
  p.bc.y_lo = neumann([](double x, double t) { return 1.0 / (1 + x + t); });
  p.bc.y_hi = dirichlet([](double x, double t) { return std::log(2 + x + t); });
  return p;
}

TelegraphProblem problem4() {
  TelegraphProblem p;
  p.name = "problem 4: cos(t)sin(x)sin(y), Dirichlet";
  p.alpha = 1.0;
  p.beta = 1.0;
  p.f = [](double x, double y, double t) {
    return 2 * (std::cos(t) - std::sin(t)) * std::sin(x) * std::sin(y);
  };
  p.phi = [](double x, double y) { return std::sin(x) * std::sin(y); };
  p.psi = [](double, double) { return 0.0; };
  p.exact = [](double x, double y, double t) {
    return std::cos(t) * std::sin(x) * std::sin(y);
  };
  p.bc.x_lo = dirichlet([](double, double) { return 0.0; });
  p.bc.x_hi = dirichlet(
      [](double y, double t) { return std::cos(t) * std::sin(1.0) * std::sin(y); });
  p.bc.y_lo = dirichlet([](double, double) { return 0.0; });
  p.bc.y_hi = dirichlet(
      [](double x, double t) { return std::cos(t) * std::sin(x) * std::sin(1.0); });
  return p;
}

TelegraphProblem problem5(double alpha, double beta) {
  TelegraphProblem p;
  p.name = "problem 5: exp(-t)sinh(x)sinh(y), Neumann on y edges";
  p.alpha = alpha;
  p.beta = beta;
  const double c = beta * beta - 2 * alpha - 1;
  p.f = [c](double x, double y, double t) {
    return c * std::exp(-t) * std::sinh(x) * std::sinh(y);
  };
  p.phi = [](double x, double y) { return std::sinh(x) * std::sinh(y); };
  p.psi = [](double x, double y) { return -std::sinh(x) * std::sinh(y); };
  p.exact = [](double x, double y, double t) {
    return std::exp(-t) * std::sinh(x) * std::sinh(y);
  };
  p.bc.x_lo = dirichlet([](double, double) { return 0.0; });
  p.bc.x_hi = dirichlet(
      [](double y, double t) { return std::exp(-t) * std::sinh(1.0) * std::sinh(y); });
  p.bc.y_lo = neumann([](double x, double t) { return std::exp(-t) * std::sinh(x); });
  p.bc.y_hi = neumann([](double x, double t) {
    return std::exp(-t) * std::sinh(x) * std::cosh(1.0);
  });
  return p;
}

TelegraphProblem problem6(double alpha, double beta) {
  TelegraphProblem p;
  p.name = "problem 6: cos(t)sinh(x)sinh(y), Neumann on y=1";
  p.alpha = alpha;
  p.beta = beta;
  // u_tt = -cos t S, 2a u_t = -2a sin t S, laplacian = 2 cos t S.
  p.f = [alpha, beta](double x, double y, double t) {
    return (beta * beta * std::cos(t) - 3 * std::cos(t) - 2 * alpha * std::sin(t)) *
           std::sinh(x) * std::sinh(y);
  };
  p.phi = [](double x, double y) { return std::sinh(x) * std::sinh(y); };
  p.psi = [](double, double) { return 0.0; };
  p.exact = [](double x, double y, double t) {
    return std::cos(t) * std::sinh(x) * std::sinh(y);
  };
  p.bc.x_lo = dirichlet([](double, double) { return 0.0; });
  p.bc.x_hi = dirichlet(
      [](double y, double t) { return std::cos(t) * std::sinh(1.0) * std::sinh(y); });
  p.bc.y_lo = dirichlet([](double, double) { return 0.0; });
  p.bc.y_hi = neumann([](double x, double t) {
    return std::cos(t) * std::sinh(x) * std::cosh(1.0);
  });
  return p;
}

}  // namespace

TelegraphProblem make_problem(int id, std::optional<double> alpha,
                              std::optional<double> beta) {
  switch (id) {
    case 1: return problem1();
    case 2: return problem2();
    case 3: return problem3();
    case 4: return problem4();
    case 5: return problem5(alpha.value_or(10.0), beta.value_or(5.0));
    case 6: return problem6(alpha.value_or(10.0), beta.value_or(5.0));
    default:
      throw std::invalid_argument("unknown problem id " + std::to_string(id) +
                                  "; valid ids are 1..6");
  }
}

std::vector<TelegraphProblem> problem_catalog() {
  std::vector<TelegraphProblem> all;
  all.reserve(kProblemCount);
  for (int id = 1; id <= kProblemCount; ++id) all.push_back(make_problem(id));
  return all;
}

std::vector<ErrorReport> run_benchmark(const TelegraphProblem& problem,
                                       const Grid2D& grid, const StepConfig& cfg,
                                       std::span<const double> times) {
  if (!problem.exact) {
    throw std::invalid_argument("benchmark requires a problem with an exact solution");
  }
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("benchmark times must be ascending");
  }
  const WeightSet w = make_weights(grid);
  const State s0 = initial_state(problem, grid);

  std::vector<ErrorReport> rows;
  rows.reserve(times.size());
  const auto& exact = *problem.exact;
  const auto snapshot = [&](const State& s) {
    Eigen::MatrixXd ue(grid.gx.n, grid.gy.n);
    for (int i = 0; i < grid.gx.n; ++i) {
      for (int j = 0; j < grid.gy.n; ++j) {
        ue(i, j) = exact(grid.gx.nodes[i], grid.gy.nodes[j], s.t);
      }
    }
    ErrorReport r = error_norms(s.u, ue, grid.gx.h);
    r.t = s.t;
    r.dt = cfg.dt;
    r.grid_label = std::to_string(grid.gx.n) + "x" + std::to_string(grid.gy.n);
    r.scheme = scheme_name(cfg.scheme);
    rows.push_back(std::move(r));
  };

  StepConfig run_cfg = cfg;
  if (!times.empty()) run_cfg.t_end = std::max(cfg.t_end, times.back());
  integrate(s0, problem, grid, w, run_cfg, times, snapshot);
  return rows;
}

}  // namespace teldq
