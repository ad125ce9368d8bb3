#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "teldq/dqm_weights.hpp"
#include "teldq/grid.hpp"

namespace teldq {

/// Kronecker product, dense.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Interior operator blocks of the semi-discrete system. With m = nx-2,
/// p = ny-2: bx = (interior x weights) kron I_p, by = I_m kron (interior y
/// weights), b = -beta^2 I + bx + by, all of order m*p.
struct SystemMatrices {
  Eigen::MatrixXd interior_ax2;  // (nx-2) square
  Eigen::MatrixXd interior_by2;  // (ny-2) square
  Eigen::MatrixXd bx;
  Eigen::MatrixXd by;
  Eigen::MatrixXd b;
};

SystemMatrices assemble_blocks(const WeightSet& w, const Grid2D& grid, double beta);

/// Eigenvalues of a dense real square matrix (real Schur reduction via
/// Eigen). Throws std::runtime_error on non-convergence.
std::vector<std::complex<double>> dense_spectrum(const Eigen::MatrixXd& m);

/// Both roots of lambda^2 + 2*alpha*lambda - lambda_b = 0, i.e. the system
/// eigenvalues that map to a given spatial eigenvalue.
std::pair<std::complex<double>, std::complex<double>> damping_roots(
    double alpha, std::complex<double> lambda_b);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  double max_real = 0.0;
  double max_abs_imag = 0.0;
  std::string grid_label;
};

/// Stability verdict for one grid. lambda_b lists the spectrum of the
/// spatial operator b assembled from the two small interior blocks through
/// the Kronecker-sum identity; lambda_a lists both roots of
/// lambda^2 + 2*alpha*lambda - lambda_b = 0 per lambda_b. The system is
/// declared stable when every lambda_b has negative real part with
/// |Im| <= 1e-6 (1 + |lambda_b|) and every lambda_a has Re <= 0.
struct StabilityReport {
  SpectrumReport lambda_b;
  SpectrumReport lambda_a;
  SpectrumReport lambda_x;  // spectrum of the interior x block
  SpectrumReport lambda_y;  // spectrum of the interior y block
  bool pass = false;
  bool marginal = false;  // some lambda_b within tolerance of 0
  // Largest |lambda_a|; z = max_abs_lambda_a * dt must stay inside the
  // scheme's stability region. A conservative radius for eigenvalues near
  // the imaginary axis is about 2.2 for the four-stage scheme and 3.4 for
  // the five-stage one.
  double max_abs_lambda_a = 0.0;
  bool dense_checked = false;       // cross-check ran (small grids only)
  double dense_max_mismatch = 0.0;  // Kronecker-sum spectrum vs dense spectrum
};

/// Requires alpha > 0. The dense cross-check runs when both directions
/// have at most 21 nodes.
StabilityReport stability_report(const WeightSet& w, const Grid2D& grid, double alpha,
                                 double beta);

}  // namespace teldq
