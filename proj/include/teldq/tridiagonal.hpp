#pragma once

#include <Eigen/Dense>

namespace teldq {

/// Banded storage of an n-by-n tridiagonal system. sub[0] and super[n-1]
/// are ignored.
struct TridiagonalSystem {
  Eigen::VectorXd sub;
  Eigen::VectorXd diag;
  Eigen::VectorXd super;
  Eigen::VectorXd rhs;

  long size() const { return diag.size(); }

  /// Strict row dominance: |diag_i| > |sub_i| + |super_i| for all i.
  bool diagonally_dominant() const;
};

/// Solves the system by forward elimination and back substitution.
/// Throws std::runtime_error naming the row when a pivot magnitude drops
/// below 1e-14.
Eigen::VectorXd thomas_solve(const TridiagonalSystem& sys);

}  // namespace teldq
