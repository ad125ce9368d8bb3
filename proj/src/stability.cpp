#include "teldq/stability.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace teldq {

namespace {

void sort_complex(std::vector<std::complex<double>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

SpectrumReport make_report(std::vector<std::complex<double>> vals, std::string label) {
  sort_complex(vals);
  SpectrumReport r;
  r.max_real = -std::numeric_limits<double>::infinity();
  r.max_abs_imag = 0.0;
  for (const auto& z : vals) {
    r.max_real = std::max(r.max_real, z.real());
    r.max_abs_imag = std::max(r.max_abs_imag, std::abs(z.imag()));
  }
  r.eigenvalues = std::move(vals);
  r.grid_label = std::move(label);
  return r;
}

}  // namespace

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SystemMatrices assemble_blocks(const WeightSet& w, const Grid2D& grid, double beta) {
  const long nx = grid.gx.n, ny = grid.gy.n;
  SystemMatrices m;
  m.interior_ax2 = w.a2w.block(1, 1, nx - 2, nx - 2);
  m.interior_by2 = w.b2w.block(1, 1, ny - 2, ny - 2);
  m.bx = kron(m.interior_ax2, Eigen::MatrixXd::Identity(ny - 2, ny - 2));
  m.by = kron(Eigen::MatrixXd::Identity(nx - 2, nx - 2), m.interior_by2);
  m.b = m.bx + m.by;
  m.b.diagonal().array() -= beta * beta;
  return m;
}

std::vector<std::complex<double>> dense_spectrum(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("dense_spectrum needs a square matrix");
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue iteration failed to converge for order " +
                             std::to_string(m.rows()) + " matrix");
  }
  std::vector<std::complex<double>> vals(m.rows());
  for (long i = 0; i < m.rows(); ++i) vals[i] = solver.eigenvalues()[i];
  return vals;
}

std::pair<std::complex<double>, std::complex<double>> damping_roots(
    double alpha, std::complex<double> lambda_b) {
  const std::complex<double> root =
      std::sqrt(std::complex<double>(alpha * alpha, 0.0) + lambda_b);
  return {-alpha + root, -alpha - root};
}

StabilityReport stability_report(const WeightSet& w, const Grid2D& grid, double alpha,
                                 double beta) {
  if (!(alpha > 0)) throw std::invalid_argument("stability analysis requires alpha > 0");

  const std::string label =
      std::to_string(grid.gx.n) + "x" + std::to_string(grid.gy.n);
  const SystemMatrices sys = assemble_blocks(w, grid, beta);

  StabilityReport rep;
  rep.lambda_x = make_report(dense_spectrum(sys.interior_ax2), label);
  rep.lambda_y = make_report(dense_spectrum(sys.interior_by2), label);

  // Spectrum of b through the Kronecker sum: every pairwise sum, shifted.
  std::vector<std::complex<double>> lb;
  lb.reserve(rep.lambda_x.eigenvalues.size() * rep.lambda_y.eigenvalues.size());
  for (const auto& lx : rep.lambda_x.eigenvalues) {
    for (const auto& ly : rep.lambda_y.eigenvalues) {
      lb.push_back(lx + ly - beta * beta);
    }
  }
  rep.lambda_b = make_report(std::move(lb), label);

  if (grid.gx.n <= 21 && grid.gy.n <= 21) {
    rep.dense_checked = true;
    auto dense = dense_spectrum(sys.b);
    sort_complex(dense);
    double mismatch = 0.0;
    for (size_t i = 0; i < dense.size(); ++i) {
      mismatch = std::max(mismatch, std::abs(dense[i] - rep.lambda_b.eigenvalues[i]));
    }
    rep.dense_max_mismatch = mismatch;
  }

  std::vector<std::complex<double>> la;
  la.reserve(2 * rep.lambda_b.eigenvalues.size());
  bool pass = true;
  bool marginal = false;
  for (const auto& zb : rep.lambda_b.eigenvalues) {
    if (!(zb.real() < 0) || std::abs(zb.imag()) > 1e-6 * (1 + std::abs(zb))) {
      pass = false;
    }
    if (std::abs(zb) <= 1e-9 * (1 + alpha * alpha)) marginal = true;
    const auto [r1, r2] = damping_roots(alpha, zb);
    if (std::abs(r1 - r2) <= 1e-12 * alpha) marginal = true;  // double root at -alpha
    la.push_back(r1);
    la.push_back(r2);
  }
  rep.lambda_a = make_report(std::move(la), label);
  for (const auto& za : rep.lambda_a.eigenvalues) {
    if (za.real() > 0) pass = false;
    rep.max_abs_lambda_a = std::max(rep.max_abs_lambda_a, std::abs(za));
  }
  rep.pass = pass;
  rep.marginal = marginal;
  return rep;
}

}  // namespace teldq
