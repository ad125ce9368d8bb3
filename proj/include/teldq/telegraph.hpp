#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "teldq/boundary.hpp"
#include "teldq/dqm_weights.hpp"
#include "teldq/grid.hpp"

namespace teldq {

using SpaceFn = std::function<double(double, double)>;
using SpaceTimeFn = std::function<double(double, double, double)>;

/// One instance of u_tt + 2*alpha*u_t + beta^2*u = u_xx + u_yy + f on the
/// unit square: coefficients, forcing, initial data, edge conditions and an
/// optional closed-form solution for error reporting.
struct TelegraphProblem {
  std::string name;
  double alpha = 1.0;  // damping, must be positive
  double beta = 0.0;   // reaction, enters as beta^2
  SpaceTimeFn f;
  SpaceFn phi;  // u at t = 0
  SpaceFn psi;  // u_t at t = 0
  BoundarySpec bc;
  std::optional<SpaceTimeFn> exact;
};

/// Full-grid fields of the first-order system (u, v = u_t) at time t.
/// Edge entries of u track the boundary closure; edge entries of v are not
/// part of the semi-discrete system and are carried for sampling only.
struct State {
  Eigen::MatrixXd u;
  Eigen::MatrixXd v;
  double t = 0.0;
};

/// Samples phi and psi on the grid at t = 0. Throws std::runtime_error
/// naming the node if a sample is not finite.
State initial_state(const TelegraphProblem& problem, const Grid2D& grid);

/// Interior source K = f + boundary columns of the second-order quadrature:
///   K(i,j) = f(i,j,t) + a2(i,0) u(0,j) + a2(i,nx-1) u(nx-1,j)
///                     + b2(j,0) u(i,0) + b2(j,ny-1) u(i,ny-1)
/// for interior (i,j). Requires the edges of u closed at time t.
Eigen::MatrixXd assemble_source(const Eigen::MatrixXd& u, const TelegraphProblem& problem,
                                const Grid2D& grid, const WeightSet& w, double t);

/// Time derivatives (du, dv) on interior nodes:
///   du = v
///   dv = interior second-order sums in x and y + K - 2*alpha*v - beta^2*u.
/// Requires state.u closed at state.t.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> rhs(const State& state,
                                                const TelegraphProblem& problem,
                                                const Grid2D& grid, const WeightSet& w);

}  // namespace teldq
