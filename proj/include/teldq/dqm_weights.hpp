#pragma once

#include <Eigen/Dense>

#include "teldq/grid.hpp"
#include "teldq/spline_basis.hpp"

namespace teldq {

/// First-order quadrature weights A with psi * A^T = psi' column by column
/// (one tridiagonal solve per node). Row i approximates d/dx at node i as a
/// weighted sum over all nodes of the grid line.
Eigen::MatrixXd first_order_weights(const ModifiedBasisMatrices& basis);

/// Second-order weights from the first-order matrix:
///   w2(i,j) = 2 * (w1(i,j) * w1(i,i) - w1(i,j) / (x_i - x_j)),  i != j,
/// with the diagonal closed so each row sums to zero. Only order 2 is
/// supported; other orders are rejected.
Eigen::MatrixXd higher_order_weights(const Eigen::MatrixXd& w1, const Grid1D& grid,
                                     int order);

/// Cached quadrature weights for both directions of a grid. Immutable after
/// construction; shared freely across runs.
struct WeightSet {
  Eigen::MatrixXd a1w;  // x direction, first order  (nx by nx)
  Eigen::MatrixXd a2w;  // x direction, second order
  Eigen::MatrixXd b1w;  // y direction, first order  (ny by ny)
  Eigen::MatrixXd b2w;  // y direction, second order
};

WeightSet make_weights(const Grid2D& grid);

}  // namespace teldq
