#include "teldq/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace teldq {

namespace {

constexpr double kPivotTol = 1e-12;

[[noreturn]] void throw_ill_posed(const char* which, double magnitude) {
  throw std::runtime_error(std::string("ill-posed boundary closure: ") + which +
                           " magnitude " + std::to_string(magnitude) + " below 1e-12");
}

// Generic one-direction closure. Solves for the two edge values of each
// grid line given the line's interior values, the direction's first-order
// weights and the two edge specs. `interior` is (#lines) x (n-2): one row
// per line, columns follow nodes 1..n-2 of the closed direction.
std::pair<Eigen::VectorXd, Eigen::VectorXd> close_lines(
    const Eigen::MatrixXd& interior, const Eigen::VectorXd& coords_along_lines,
    const Eigen::MatrixXd& w1, const EdgeSpec& lo, const EdgeSpec& hi, double t) {
  const long n = w1.rows();
  const long lines = interior.rows();

  Eigen::VectorXd lo_vals(lines), hi_vals(lines);
  Eigen::VectorXd s_lo, s_hi;

  if (lo.kind == EdgeKind::neumann || hi.kind == EdgeKind::neumann) {
    // S(line) = trace(coord, t) - sum over interior nodes of the edge row.
    if (lo.kind == EdgeKind::neumann) {
      s_lo = interior * w1.row(0).segment(1, n - 2).transpose();
      for (long k = 0; k < lines; ++k) s_lo[k] = lo.data(coords_along_lines[k], t) - s_lo[k];
    }
    if (hi.kind == EdgeKind::neumann) {
      s_hi = interior * w1.row(n - 1).segment(1, n - 2).transpose();
      for (long k = 0; k < lines; ++k) s_hi[k] = hi.data(coords_along_lines[k], t) - s_hi[k];
    }
  }

  if (lo.kind == EdgeKind::dirichlet) {
    for (long k = 0; k < lines; ++k) lo_vals[k] = lo.data(coords_along_lines[k], t);
  }
  if (hi.kind == EdgeKind::dirichlet) {
    for (long k = 0; k < lines; ++k) hi_vals[k] = hi.data(coords_along_lines[k], t);
  }

  if (lo.kind == EdgeKind::neumann && hi.kind == EdgeKind::neumann) {
    const double det =
        w1(0, 0) * w1(n - 1, n - 1) - w1(n - 1, 0) * w1(0, n - 1);
    if (std::abs(det) < kPivotTol) throw_ill_posed("2x2 determinant", std::abs(det));
    lo_vals = (s_lo * w1(n - 1, n - 1) - s_hi * w1(0, n - 1)) / det;
    hi_vals = (s_hi * w1(0, 0) - s_lo * w1(n - 1, 0)) / det;
  } else if (lo.kind == EdgeKind::neumann) {
    // hi edge known: the lo quadrature row degenerates to a scalar equation.
    if (std::abs(w1(0, 0)) < kPivotTol) throw_ill_posed("scalar pivot", std::abs(w1(0, 0)));
    lo_vals = (s_lo - w1(0, n - 1) * hi_vals) / w1(0, 0);
  } else if (hi.kind == EdgeKind::neumann) {
    if (std::abs(w1(n - 1, n - 1)) < kPivotTol) {
      throw_ill_posed("scalar pivot", std::abs(w1(n - 1, n - 1)));
    }
    hi_vals = (s_hi - w1(n - 1, 0) * lo_vals) / w1(n - 1, n - 1);
  }
  return {lo_vals, hi_vals};
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> close_boundary_x(
    const Eigen::MatrixXd& u, const BoundarySpec& spec, const Grid2D& grid,
    const WeightSet& w, double t) {
  const long nx = grid.gx.n, ny = grid.gy.n;
  // One line per interior column j; interior nodes run along x.
  const Eigen::MatrixXd interior =
      u.block(1, 1, nx - 2, ny - 2).transpose();
  const Eigen::VectorXd coords = grid.gy.nodes.segment(1, ny - 2);
  return close_lines(interior, coords, w.a1w, spec.x_lo, spec.x_hi, t);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> close_boundary_y(
    const Eigen::MatrixXd& u, const BoundarySpec& spec, const Grid2D& grid,
    const WeightSet& w, double t) {
  const long ny = grid.gy.n;
  // One line per row i (all rows); interior nodes run along y.
  const Eigen::MatrixXd interior = u.middleCols(1, ny - 2);
  return close_lines(interior, grid.gx.nodes, w.b1w, spec.y_lo, spec.y_hi, t);
}

void close_boundary(Eigen::MatrixXd& u, const BoundarySpec& spec, const Grid2D& grid,
                    const WeightSet& w, double t) {
  const long nx = grid.gx.n, ny = grid.gy.n;

  const auto [x_lo_vals, x_hi_vals] = close_boundary_x(u, spec, grid, w, t);
  u.row(0).segment(1, ny - 2) = x_lo_vals.transpose();
  u.row(nx - 1).segment(1, ny - 2) = x_hi_vals.transpose();

  const auto [y_lo_vals, y_hi_vals] = close_boundary_y(u, spec, grid, w, t);
  u.col(0) = y_lo_vals;
  u.col(ny - 1) = y_hi_vals;

  if (spec.x_lo.kind == EdgeKind::dirichlet) {
    u(0, 0) = spec.x_lo.data(grid.gy.nodes[0], t);
    u(0, ny - 1) = spec.x_lo.data(grid.gy.nodes[ny - 1], t);
  }
  if (spec.x_hi.kind == EdgeKind::dirichlet) {
    u(nx - 1, 0) = spec.x_hi.data(grid.gy.nodes[0], t);
    u(nx - 1, ny - 1) = spec.x_hi.data(grid.gy.nodes[ny - 1], t);
  }
}

}  // namespace teldq
