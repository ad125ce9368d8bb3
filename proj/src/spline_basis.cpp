#include "teldq/spline_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace teldq {

namespace {

void check_denominator(double d, const char* what) {
  if (std::abs(d) < 1e-14) {
    throw std::invalid_argument(std::string("spline constants degenerate: ") + what +
                                " below 1e-14 for this spacing");
  }
}

}  // namespace

SplineTables spline_constants(double h) {
  detail::check_spacing(h);
  const double sh2 = std::sin(h / 2);
  const double sh = std::sin(h);
  const double s3h2 = std::sin(3 * h / 2);
  const double ch = std::cos(h);
  const double ch2 = std::cos(h / 2);
  const double c3h2 = std::cos(3 * h / 2);

  check_denominator(sh * s3h2, "sin(h)*sin(3h/2)");
  check_denominator(1 + 2 * ch, "1+2cos(h)");
  check_denominator(s3h2, "sin(3h/2)");
  check_denominator(sh2 * sh2 * (2 * ch2 + c3h2), "sin^2(h/2)*(2cos(h/2)+cos(3h/2))");
  check_denominator(sh2 * sh2 * (2 + 4 * ch), "sin^2(h/2)*(2+4cos(h))");

  SplineTables t;
  t.h = h;
  t.omega = sh2 * sh * s3h2;
  t.a1 = sh2 * sh2 / (sh * s3h2);
  t.a2 = 2.0 / (1 + 2 * ch);
  t.a3 = 3.0 / (4 * s3h2);
  t.a4 = (3 + 9 * ch) / (16 * sh2 * sh2 * (2 * ch2 + c3h2));
  t.a5 = 3 * ch2 * ch2 / (sh2 * sh2 * (2 + 4 * ch));
  t.value_row = {t.a1, t.a2, t.a1};
  t.d1_row = {t.a3, 0.0, -t.a3};
  t.d2_row = {t.a4, -t.a5, t.a4};
  return t;
}

ModifiedBasisMatrices modified_basis(const Grid1D& grid) {
  const int n = grid.n;
  const SplineTables t = spline_constants(grid.h);

  ModifiedBasisMatrices m;
  m.h = grid.h;
  m.psi = Eigen::MatrixXd::Zero(n, n);
  m.psi_d1 = Eigen::MatrixXd::Zero(n, n);
  m.psi_d2 = Eigen::MatrixXd::Zero(n, n);

  // Adds coef * (stencil of the spline centered at node c) into row p,
  // dropping offsets that fall outside the grid (ghost columns).
  const auto add = [n](Eigen::MatrixXd& mat, int p, int c, double coef,
                       const std::array<double, 3>& row) {
    for (int off = -1; off <= 1; ++off) {
      const int j = c + off;
      if (j >= 0 && j < n) mat(p, j) += coef * row[off + 1];
    }
  };

  for (int p = 0; p < n; ++p) {
    for (auto [mat, row] : {std::pair{&m.psi, &t.value_row},
                            std::pair{&m.psi_d1, &t.d1_row},
                            std::pair{&m.psi_d2, &t.d2_row}}) {
      add(*mat, p, p, 1.0, *row);
      if (p == 0) add(*mat, p, -1, 2.0, *row);       // absorbs left ghost
      if (p == 1) add(*mat, p, -1, -1.0, *row);      // cancels left ghost
      if (p == n - 2) add(*mat, p, n, -1.0, *row);   // cancels right ghost
      if (p == n - 1) add(*mat, p, n, 2.0, *row);    // absorbs right ghost
    }
  }
  return m;
}

}  // namespace teldq
