#pragma once

#include <Eigen/Dense>

namespace teldq {

/// Uniform 1-D partition of [0, 1] with n >= 3 nodes.
///
/// Nodes are x_i = i * h for i = 0..n-1 with h = 1/(n-1); the last node is
/// pinned to 1 exactly.
struct Grid1D {
  int n = 0;
  double h = 0.0;
  Eigen::VectorXd nodes;

  int interior_count() const { return n - 2; }
};

/// Tensor-product grid on the unit square.
struct Grid2D {
  Grid1D gx;
  Grid1D gy;

  long node_count() const { return static_cast<long>(gx.n) * gy.n; }
  bool isotropic() const { return gx.n == gy.n; }
};

Grid1D make_grid_1d(int n);

/// Builds the uniform nx-by-ny grid. Throws std::invalid_argument for
/// nx < 3 or ny < 3 (no interior nodes, closures degenerate).
Grid2D make_grid(int nx, int ny);

}  // namespace teldq
