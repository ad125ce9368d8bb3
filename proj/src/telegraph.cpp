#include "teldq/telegraph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace teldq {

State initial_state(const TelegraphProblem& problem, const Grid2D& grid) {
  const int nx = grid.gx.n, ny = grid.gy.n;
  State s;
  s.u.resize(nx, ny);
  s.v.resize(nx, ny);
  s.t = 0.0;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double x = grid.gx.nodes[i], y = grid.gy.nodes[j];
      s.u(i, j) = problem.phi(x, y);
      s.v(i, j) = problem.psi(x, y);
      if (!std::isfinite(s.u(i, j)) || !std::isfinite(s.v(i, j))) {
        throw std::runtime_error("non-finite initial data at node (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ") = (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
      }
    }
  }
  return s;
}

Eigen::MatrixXd assemble_source(const Eigen::MatrixXd& u, const TelegraphProblem& problem,
                                const Grid2D& grid, const WeightSet& w, double t) {
  const long nx = grid.gx.n, ny = grid.gy.n;
  Eigen::MatrixXd k(nx - 2, ny - 2);
  for (long i = 1; i < nx - 1; ++i) {
    for (long j = 1; j < ny - 1; ++j) {
      k(i - 1, j - 1) = problem.f(grid.gx.nodes[i], grid.gy.nodes[j], t);
      if (!std::isfinite(k(i - 1, j - 1))) {
        throw std::runtime_error("non-finite forcing at node (" + std::to_string(i) +
                                 "," + std::to_string(j) + "), t=" + std::to_string(t));
      }
    }
  }
  k.noalias() += w.a2w.col(0).segment(1, nx - 2) * u.row(0).segment(1, ny - 2);
  k.noalias() +=
      w.a2w.col(nx - 1).segment(1, nx - 2) * u.row(nx - 1).segment(1, ny - 2);
  k.noalias() +=
      u.col(0).segment(1, nx - 2) * w.b2w.col(0).segment(1, ny - 2).transpose();
  k.noalias() += u.col(ny - 1).segment(1, nx - 2) *
                 w.b2w.col(ny - 1).segment(1, ny - 2).transpose();
  return k;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> rhs(const State& state,
                                                const TelegraphProblem& problem,
                                                const Grid2D& grid, const WeightSet& w) {
  const long nx = grid.gx.n, ny = grid.gy.n;
  const auto u_int = state.u.block(1, 1, nx - 2, ny - 2);
  const auto v_int = state.v.block(1, 1, nx - 2, ny - 2);

  Eigen::MatrixXd dv = assemble_source(state.u, problem, grid, w, state.t);
  dv.noalias() += w.a2w.block(1, 1, nx - 2, nx - 2) * u_int;
  dv.noalias() += u_int * w.b2w.block(1, 1, ny - 2, ny - 2).transpose();
  dv -= 2.0 * problem.alpha * v_int;
  dv -= problem.beta * problem.beta * u_int;

  return {v_int, std::move(dv)};
}

}  // namespace teldq
