#pragma once

#include <Eigen/Dense>
#include <functional>

#include "teldq/dqm_weights.hpp"
#include "teldq/grid.hpp"

namespace teldq {

enum class EdgeKind { dirichlet, neumann };

/// Trace data along one edge as a function of (tangential coordinate, time).
/// Dirichlet edges carry the solution value, Neumann edges the derivative
/// with respect to the coordinate normal to the edge (d/dx on x edges,
/// d/dy on y edges, taken in the increasing-coordinate sense on both sides).
using TraceFn = std::function<double(double, double)>;

struct EdgeSpec {
  EdgeKind kind = EdgeKind::dirichlet;
  TraceFn data;
};

struct BoundarySpec {
  EdgeSpec x_lo;  // x = 0
  EdgeSpec x_hi;  // x = 1
  EdgeSpec y_lo;  // y = 0
  EdgeSpec y_hi;  // y = 1
};

/// Edge values u(0, j) and u(nx-1, j) at the interior columns j = 1..ny-2,
/// from Dirichlet traces or the first-order quadrature rows. Returned
/// vectors have length ny-2 (entry 0 is j = 1). Throws std::runtime_error
/// when the closure system pivot or determinant falls below 1e-12.
std::pair<Eigen::VectorXd, Eigen::VectorXd> close_boundary_x(
    const Eigen::MatrixXd& u, const BoundarySpec& spec, const Grid2D& grid,
    const WeightSet& w, double t);

/// Edge values u(i, 0) and u(i, ny-1) for every row i = 0..nx-1. Rows 0 and
/// nx-1 use the current x-edge entries of u in their quadrature sums, so
/// the x edges must be closed first. Returned vectors have length nx.
std::pair<Eigen::VectorXd, Eigen::VectorXd> close_boundary_y(
    const Eigen::MatrixXd& u, const BoundarySpec& spec, const Grid2D& grid,
    const WeightSet& w, double t);

/// Fills all four edges of u in place from its interior values at time t:
/// x edges first, then y edges (which see the fresh x edges), then corners
/// from whichever adjacent edge is Dirichlet (x preferred), keeping the
/// y-closure value when neither is.
void close_boundary(Eigen::MatrixXd& u, const BoundarySpec& spec, const Grid2D& grid,
                    const WeightSet& w, double t);

}  // namespace teldq
