#include "teldq/grid.hpp"

#include <stdexcept>
#include <string>

namespace teldq {

Grid1D make_grid_1d(int n) {
  if (n < 3) {
    throw std::invalid_argument("grid needs at least 3 nodes per direction, got " +
                                std::to_string(n));
  }
  Grid1D g;
  g.n = n;
  g.h = 1.0 / (n - 1);
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i) g.nodes[i] = i * g.h;
  g.nodes[n - 1] = 1.0;
  return g;
}

Grid2D make_grid(int nx, int ny) {
  return Grid2D{make_grid_1d(nx), make_grid_1d(ny)};
}

}  // namespace teldq
