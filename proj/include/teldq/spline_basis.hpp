#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>

#include "teldq/grid.hpp"

namespace teldq {

// Largest admissible knot spacing. The normalizer
// omega(h) = sin(h/2) sin(h) sin(3h/2) and the nodal-value denominators all
// vanish at h = 2*pi/3, so the basis is only defined on (0, 2*pi/3).
inline constexpr double kMaxSplineSpacing = 2.0943951023931953;  // 2*pi/3

namespace detail {

template <typename Scalar>
void check_spacing(Scalar h) {
  if (!(h > Scalar(0)) || !(h < Scalar(kMaxSplineSpacing))) {
    throw std::invalid_argument("spline spacing must lie in (0, 2*pi/3)");
  }
}

}  // namespace detail

/// Value of the trigonometric cubic B-spline anchored at s = 0, evaluated at
/// offset s from the anchor. The support is [0, 4h); each of the four knot
/// intervals carries its own product of sin((s - kh)/2) factors, normalized
/// by omega(h). Returns exactly 0 outside the support.
template <typename Scalar>
Scalar spline_value(Scalar s, Scalar h) {
  detail::check_spacing(h);
  if (s < Scalar(0) || s >= Scalar(4) * h) return Scalar(0);
  const Scalar omega = std::sin(h / 2) * std::sin(h) * std::sin(3 * h / 2);
  // p_k(s) = sin((s - kh)/2), q_k(s) = sin((kh - s)/2) = -p_k(s)
  const auto p = [&](int k) { return std::sin((s - Scalar(k) * h) / 2); };
  const auto q = [&](int k) { return std::sin((Scalar(k) * h - s) / 2); };
  Scalar v;
  if (s < h) {
    v = p(0) * p(0) * p(0);
  } else if (s < 2 * h) {
    v = p(0) * (p(0) * q(2) + p(1) * q(3)) + p(1) * p(1) * q(4);
  } else if (s < 3 * h) {
    v = q(4) * (p(1) * q(3) + p(2) * q(4)) + p(0) * q(3) * q(3);
  } else {
    v = q(4) * q(4) * q(4);
  }
  return v / omega;
}

/// Spline anchored at node index i of a uniform grid with spacing h
/// (anchor coordinate i*h, support [i*h, (i+4)*h)).
template <typename Scalar>
Scalar eval_spline(int i, Scalar x, Scalar h) {
  return spline_value(x - Scalar(i) * h, h);
}

/// Nodal constants of the basis and the three-point stencils of the spline
/// and its first two derivatives at the interior support nodes
/// (anchor+h, anchor+2h, anchor+3h).
///
/// The derivative stencil signs come from differentiating the closed form:
/// the bump rises through its left neighbor (+a3), is flat at the center,
/// and falls through the right neighbor (-a3); curvature is +a4 at both
/// neighbors and -a5 at the peak (classical cubic limit 1/h^2, -2/h^2).
/// Tests cross-check every entry against finite differences of
/// spline_value.
struct SplineTables {
  double h = 0.0;
  double omega = 0.0;
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0, a5 = 0.0;
  std::array<double, 3> value_row{};  // (a1, a2, a1)
  std::array<double, 3> d1_row{};     // (+a3, 0, -a3)
  std::array<double, 3> d2_row{};     // (a4, -a5, a4)
};

/// Computes SplineTables for spacing h. Throws std::invalid_argument when h
/// is outside (0, 2*pi/3) or any closed-form denominator falls below 1e-14.
SplineTables spline_constants(double h);

/// Collocation matrices of the end-modified basis on a grid: psi(p, l) =
/// psi_p(x_l) and the analogous first/second derivative matrices. Row and
/// column indices are 0-based node indices.
struct ModifiedBasisMatrices {
  Eigen::MatrixXd psi;
  Eigen::MatrixXd psi_d1;
  Eigen::MatrixXd psi_d2;
  double h = 0.0;
};

/// Assembles the modified-basis matrices. The first and last basis
/// functions absorb twice their ghost neighbor, the second and second-to-
/// last subtract it; interior functions are plain splines. This keeps every
/// matrix within the tridiagonal band and makes psi diagonally dominant.
ModifiedBasisMatrices modified_basis(const Grid1D& grid);

}  // namespace teldq
