#include "teldq/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace teldq {

bool TridiagonalSystem::diagonally_dominant() const {
  const long n = size();
  for (long i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(sub[i]) : 0.0) +
                       (i + 1 < n ? std::abs(super[i]) : 0.0);
    if (!(std::abs(diag[i]) > off)) return false;
  }
  return true;
}

Eigen::VectorXd thomas_solve(const TridiagonalSystem& sys) {
  const long n = sys.size();
  if (n == 0) return Eigen::VectorXd();
  if (sys.sub.size() != n || sys.super.size() != n || sys.rhs.size() != n) {
    throw std::invalid_argument("tridiagonal bands and rhs must share one length");
  }

  Eigen::VectorXd c(n), x(n);
  double pivot = sys.diag[0];
  if (std::abs(pivot) < 1e-14) {
    throw std::runtime_error("singular tridiagonal system: zero pivot at row 0");
  }
  c[0] = sys.super[0] / pivot;
  x[0] = sys.rhs[0] / pivot;
  for (long i = 1; i < n; ++i) {
    pivot = sys.diag[i] - sys.sub[i] * c[i - 1];
    if (std::abs(pivot) < 1e-14) {
      throw std::runtime_error("singular tridiagonal system: zero pivot at row " +
                               std::to_string(i));
    }
    c[i] = sys.super[i] / pivot;
    x[i] = (sys.rhs[i] - sys.sub[i] * x[i - 1]) / pivot;
  }
  for (long i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace teldq
