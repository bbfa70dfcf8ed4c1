#pragma once

#include <Eigen/Core>

#include "cfmimo/config.hpp"
#include "cfmimo/rng.hpp"

namespace cfmimo {

/// AP and user coordinates on the wrap-around square, in km.
/// Immutable after construction; safe to share across workers.
struct Layout {
  Eigen::Matrix<double, Eigen::Dynamic, 2> ap_xy;    ///< M rows in [0,D)^2
  Eigen::Matrix<double, Eigen::Dynamic, 2> user_xy;  ///< K rows in [0,D)^2
  double D = 0.0;
};

/// Uniform i.i.d. placement of M APs and K users in [0,D)^2.
/// Deterministic for fixed seed; APs are drawn before users, x before y.
Layout build_layout(const SimConfig& config, std::uint64_t seed);

/// Torus (wrap-around) distance on the D x D square: the Euclidean
/// distance minimized over the 3x3 grid of translated images. Symmetric,
/// and never larger than D/sqrt(2).
double wrap_distance(double px, double py, double qx, double qy, double D);

inline double wrap_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& q, double D) {
  return wrap_distance(p.x(), p.y(), q.x(), q.y(), D);
}

}  // namespace cfmimo
