#include "teldq/dqm_weights.hpp"

#include <stdexcept>

#include "teldq/tridiagonal.hpp"

namespace teldq {

Eigen::MatrixXd first_order_weights(const ModifiedBasisMatrices& basis) {
  const long n = basis.psi.rows();
  TridiagonalSystem sys;
  sys.sub.setZero(n);
  sys.diag.resize(n);
  sys.super.setZero(n);
  sys.rhs.resize(n);
  for (long i = 0; i < n; ++i) {
    if (i > 0) sys.sub[i] = basis.psi(i, i - 1);
    sys.diag[i] = basis.psi(i, i);
    if (i + 1 < n) sys.super[i] = basis.psi(i, i + 1);
  }

  Eigen::MatrixXd w(n, n);
  for (long i = 0; i < n; ++i) {
    sys.rhs = basis.psi_d1.col(i);
    w.row(i) = thomas_solve(sys).transpose();
  }
  return w;
}

Eigen::MatrixXd higher_order_weights(const Eigen::MatrixXd& w1, const Grid1D& grid,
                                     int order) {
  if (order != 2) {
    throw std::invalid_argument("only order-2 weights are supported, got order " +
                                std::to_string(order));
  }
  const long n = w1.rows();
  if (n != grid.n || w1.cols() != n) {
    throw std::invalid_argument("first-order weight matrix does not match the grid");
  }

  Eigen::MatrixXd w2 = Eigen::MatrixXd::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    double offdiag_sum = 0.0;
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dx = grid.nodes[i] - grid.nodes[j];
      if (dx == 0.0) {
        throw std::invalid_argument("coincident grid coordinates in weight recursion");
      }
      w2(i, j) = 2.0 * (w1(i, j) * w1(i, i) - w1(i, j) / dx);
      offdiag_sum += w2(i, j);
    }
    w2(i, i) = -offdiag_sum;
  }
  return w2;
}

WeightSet make_weights(const Grid2D& grid) {
  WeightSet w;
  const ModifiedBasisMatrices bx = modified_basis(grid.gx);
  w.a1w = first_order_weights(bx);
  w.a2w = higher_order_weights(w.a1w, grid.gx, 2);
  if (grid.gy.n == grid.gx.n) {
    w.b1w = w.a1w;
    w.b2w = w.a2w;
  } else {
    const ModifiedBasisMatrices by = modified_basis(grid.gy);
    w.b1w = first_order_weights(by);
    w.b2w = higher_order_weights(w.b1w, grid.gy, 2);
  }
  return w;
}

}  // namespace teldq
