#include "cfmimo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cfmimo {

Layout build_layout(const SimConfig& config, std::uint64_t seed) {
  config.validate();
  Layout layout;
  layout.D = config.D;
  layout.ap_xy.resize(config.M, 2);
  layout.user_xy.resize(config.K, 2);
  Rng rng(seed);
  for (int m = 0; m < config.M; ++m) {
    layout.ap_xy(m, 0) = rng.uniform(config.D);
    layout.ap_xy(m, 1) = rng.uniform(config.D);
  }
  for (int k = 0; k < config.K; ++k) {
    layout.user_xy(k, 0) = rng.uniform(config.D);
    layout.user_xy(k, 1) = rng.uniform(config.D);
  }
  return layout;
}

double wrap_distance(double px, double py, double qx, double qy, double D) {
  // Per-axis minimum over the images {-D, 0, +D} equals the minimum over
  // the full 3x3 grid for a product metric.
  double dx = std::abs(px - qx);
  double dy = std::abs(py - qy);
  dx = std::min(dx, D - dx);
  dy = std::min(dy, D - dy);
  return std::hypot(dx, dy);
}

}  // namespace cfmimo
