#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "teldq/telegraph.hpp"

namespace teldq {

enum class Scheme { rk43, rk54 };

inline const char* scheme_name(Scheme s) { return s == Scheme::rk43 ? "rk43" : "rk54"; }

/// Fixed-step integration window. The step count is round(t_end/dt) and
/// t_end must be a step multiple to within 1e-12.
struct StepConfig {
  double dt = 0.01;
  Scheme scheme = Scheme::rk43;
  double t_end = 1.0;

  long step_count() const;
};

/// One step of the four-stage third-order strong-stability-preserving
/// scheme. L(y, tau) evaluates the right-hand side at stage time tau. Stage
/// abscissae are propagated through the same convex combinations as the
/// state (the time argument follows the ODE tau' = 1), never hard-coded.
template <class Vec, class Rhs>
Vec ssprk43_step(const Vec& y, double t, double dt, Rhs&& L) {
  const Vec k1 = y + (dt / 2) * L(y, t);
  const double t1 = t + dt / 2;
  const Vec k2 = k1 + (dt / 2) * L(k1, t1);
  const double t2 = t1 + dt / 2;
  const Vec k3 = (2.0 / 3.0) * y + (1.0 / 3.0) * k2 + (dt / 6) * L(k2, t2);
  const double t3 = (2.0 / 3.0) * t + (1.0 / 3.0) * t2 + dt / 6;
  return k3 + (dt / 2) * L(k3, t3);
}

/// One step of the five-stage fourth-order scheme with its fifteen-decimal
/// coefficients. The L(k3) evaluation is shared between the fourth stage
/// and the final combination.
template <class Vec, class Rhs>
Vec ssprk54_step(const Vec& y, double t, double dt, Rhs&& L) {
  constexpr double c10 = 0.391752226571890;
  constexpr double a20 = 0.444370493651235, a21 = 0.555629506348765,
                   c21 = 0.368410593050371;
  constexpr double a30 = 0.620101851488403, a32 = 0.379898148511597,
                   c32 = 0.251891774271694;
  constexpr double a40 = 0.178079954393132, a43 = 0.821920045606868,
                   c43 = 0.544974750228521;
  constexpr double b2 = 0.517231671970585, b3 = 0.096059710526147,
                   d3 = 0.063692468666290, b4 = 0.386708617503269,
                   d4 = 0.226007483236906;

  const Vec k1 = y + c10 * dt * L(y, t);
  const double t1 = t + c10 * dt;
  const Vec k2 = a20 * y + a21 * k1 + c21 * dt * L(k1, t1);
  const double t2 = a20 * t + a21 * t1 + c21 * dt;
  const Vec l2 = L(k2, t2);
  const Vec k3 = a30 * y + a32 * k2 + c32 * dt * l2;
  const double t3 = a30 * t + a32 * t2 + c32 * dt;
  const Vec l3 = L(k3, t3);
  const Vec k4 = a40 * y + a43 * k3 + c43 * dt * l3;
  const double t4 = a40 * t + a43 * t3 + c43 * dt;
  return b2 * k2 + b3 * k3 + d3 * dt * l3 + b4 * k4 + d4 * dt * L(k4, t4);
}

template <class Vec, class Rhs>
Vec ssprk_step(Scheme scheme, const Vec& y, double t, double dt, Rhs&& L) {
  return scheme == Scheme::rk43 ? ssprk43_step(y, t, dt, L)
                                : ssprk54_step(y, t, dt, L);
}

/// Called after the step that lands on a requested snapshot time.
using SnapshotFn = std::function<void(const State&)>;

/// Advances the coupled (u, v) system to cfg.t_end. The boundary of u is
/// closed at every stage evaluation time and again after each step, so the
/// returned state satisfies the closure at t_end. Snapshot times must land
/// on step boundaries (within 1e-9); the callback sees the closed state.
/// Throws std::runtime_error with the step index if a stage stops being
/// finite.
State integrate(const State& initial, const TelegraphProblem& problem,
                const Grid2D& grid, const WeightSet& w, const StepConfig& cfg,
                std::span<const double> snapshot_times = {},
                const SnapshotFn& on_snapshot = nullptr);

}  // namespace teldq
