#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teldq/grid.hpp"
#include "teldq/ssprk.hpp"
#include "teldq/telegraph.hpp"

namespace teldq {

/// Discrete error norms of a snapshot against the closed-form solution.
/// l2 = sqrt(h * sum e_k^2) over all nodes, linf = max e_k, re is the
/// l2-type error relative to the exact field and is undefined (NaN, flagged)
/// when the exact field vanishes identically on the grid.
struct ErrorReport {
  double l2 = 0.0;
  double linf = 0.0;
  double re = 0.0;
  bool re_defined = true;
  double t = 0.0;
  double dt = 0.0;
  double h = 0.0;
  std::string grid_label;
  std::string scheme;
};

/// Norms of numeric vs exact over every grid node, with the single spacing
/// h of the isotropic grid. Context fields (t, dt, scheme, label) are left
/// for the caller.
ErrorReport error_norms(const Eigen::MatrixXd& numeric, const Eigen::MatrixXd& exact,
                        double h);

inline constexpr int kProblemCount = 6;

/// One of the six catalog problems. Problems 5 and 6 take their damping and
/// reaction coefficients as parameters (tables use alpha in {10, 50}, beta
/// in {0, 5}); the others pin alpha = beta = 1 and ignore the arguments.
TelegraphProblem make_problem(int id, std::optional<double> alpha = {},
                              std::optional<double> beta = {});

/// All six problems with default parameters (alpha=10, beta=5 for 5 and 6).
std::vector<TelegraphProblem> problem_catalog();

/// Integrates once and snapshots error norms at each requested time
/// (ascending, each a step multiple). Requires an exact solution.
std::vector<ErrorReport> run_benchmark(const TelegraphProblem& problem,
                                       const Grid2D& grid, const StepConfig& cfg,
                                       std::span<const double> times);

}  // namespace teldq
