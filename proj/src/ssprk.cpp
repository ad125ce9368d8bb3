#include "teldq/ssprk.hpp"

#include <cmath>
#include <stdexcept>

namespace teldq {

namespace {

// Interior unknowns packed as [u; v], each block in line order (x index
// slow, y index fast) to match the block structure of the system matrices.
class PackedOperator {
 public:
  PackedOperator(const TelegraphProblem& problem, const Grid2D& grid,
                 const WeightSet& w)
      : problem_(problem), grid_(grid), w_(w), ni_(grid.gx.n - 2), nj_(grid.gy.n - 2) {
    scratch_.u.setZero(grid.gx.n, grid.gy.n);
    scratch_.v.setZero(grid.gx.n, grid.gy.n);
  }

  long size() const { return 2 * ni_ * nj_; }

  Eigen::VectorXd pack(const State& s) const {
    Eigen::VectorXd y(size());
    long k = 0;
    for (long i = 1; i <= ni_; ++i)
      for (long j = 1; j <= nj_; ++j) y[k++] = s.u(i, j);
    for (long i = 1; i <= ni_; ++i)
      for (long j = 1; j <= nj_; ++j) y[k++] = s.v(i, j);
    return y;
  }

  // Rebuilds a full-grid state with the boundary closed at time t. Edge
  // entries of v are zeroed; they are outside the semi-discrete system.
  State unpack(const Eigen::VectorXd& y, double t) const {
    State s;
    s.u.setZero(grid_.gx.n, grid_.gy.n);
    s.v.setZero(grid_.gx.n, grid_.gy.n);
    s.t = t;
    long k = 0;
    for (long i = 1; i <= ni_; ++i)
      for (long j = 1; j <= nj_; ++j) s.u(i, j) = y[k++];
    for (long i = 1; i <= ni_; ++i)
      for (long j = 1; j <= nj_; ++j) s.v(i, j) = y[k++];
    close_boundary(s.u, problem_.bc, grid_, w_, t);
    return s;
  }

  Eigen::VectorXd operator()(const Eigen::VectorXd& y, double t) const {
    scratch_ = unpack(y, t);
    const auto [du, dv] = rhs(scratch_, problem_, grid_, w_);
    Eigen::VectorXd dy(size());
    long k = 0;
    for (long i = 0; i < ni_; ++i)
      for (long j = 0; j < nj_; ++j) dy[k++] = du(i, j);
    for (long i = 0; i < ni_; ++i)
      for (long j = 0; j < nj_; ++j) dy[k++] = dv(i, j);
    return dy;
  }

 private:
  const TelegraphProblem& problem_;
  const Grid2D& grid_;
  const WeightSet& w_;
  long ni_, nj_;
  mutable State scratch_;
};

}  // namespace

long StepConfig::step_count() const {
  if (!(dt > 0)) throw std::invalid_argument("step size must be positive");
  if (t_end < 0) throw std::invalid_argument("t_end must be nonnegative");
  const long steps = std::lround(t_end / dt);
  if (std::abs(t_end - steps * dt) > 1e-12) {
    throw std::invalid_argument("t_end is not an integer multiple of dt");
  }
  return steps;
}

State integrate(const State& initial, const TelegraphProblem& problem,
                const Grid2D& grid, const WeightSet& w, const StepConfig& cfg,
                std::span<const double> snapshot_times, const SnapshotFn& on_snapshot) {
  const long steps = cfg.step_count();
  const auto matches = [&](double t) {
    for (const double ts : snapshot_times) {
      if (std::abs(t - ts) <= 1e-9 * std::max(1.0, std::abs(ts))) return true;
    }
    return false;
  };

  // The t = 0 snapshot is the sampled initial data, not a closure of it.
  if (on_snapshot && matches(0.0)) on_snapshot(initial);
  if (steps == 0) return initial;
  const PackedOperator op(problem, grid, w);

  Eigen::VectorXd y = op.pack(initial);
  for (long m = 0; m < steps; ++m) {
    const double t = m * cfg.dt;
    y = ssprk_step(cfg.scheme, y, t, cfg.dt, op);
    if (!y.allFinite()) {
      throw std::runtime_error("solution blew up at step " + std::to_string(m + 1) +
                               " (t=" + std::to_string(t + cfg.dt) +
                               "), max |y| = " + std::to_string(y.cwiseAbs().maxCoeff()));
    }
    const double t_next = (m + 1) * cfg.dt;
    if (on_snapshot && matches(t_next)) on_snapshot(op.unpack(y, t_next));
  }
  return op.unpack(y, steps * cfg.dt);
}

}  // namespace teldq
