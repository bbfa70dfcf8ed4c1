#pragma once

#include <Eigen/Core>

#include "cfmimo/config.hpp"
#include "cfmimo/geometry.hpp"
#include "cfmimo/rng.hpp"

namespace cfmimo {

/// Zero-mean unit-variance shadowing deviates and the AP-side / user-side
/// components they were mixed from.
struct Shadowing {
  Eigen::VectorXd a;  ///< M AP-side components
  Eigen::VectorXd b;  ///< K user-side components
  Eigen::MatrixXd z;  ///< M x K deviates, z = sqrt(delta) a + sqrt(1-delta) b
};

/// Large-scale fading state: linear-scale beta together with the pieces
/// it was assembled from.
struct LargeScaleState {
  Eigen::MatrixXd beta;   ///< M x K, linear scale, positive
  Eigen::MatrixXd z;      ///< M x K shadowing deviates actually drawn
  Eigen::VectorXd a;      ///< M AP-side shadowing components (empty if uncorrelated)
  Eigen::VectorXd b;      ///< K user-side shadowing components (empty if uncorrelated)
  Eigen::MatrixXd pl_db;  ///< M x K path loss in dB (negative numbers)
};

/// Dimensionless transmit SNRs, i.e. radiated powers over the thermal
/// noise power. The small-cell values are scaled so the total radiated
/// power matches the cell-free system: rho_d_sc = (M/K) rho_d_cf,
/// rho_u_sc = rho_u_cf, and both small-cell pilot SNRs equal rho_p_cf.
struct NormalizedSnrs {
  double rho_d_cf = 0, rho_u_cf = 0, rho_p_cf = 0;
  double rho_d_sc = 0, rho_u_sc = 0, rho_dp_sc = 0, rho_up_sc = 0;
  double noise_w = 0;  ///< noise power (W)
};

/// Hata-COST231 fixed-loss constant L in dB. f in MHz, heights in m.
double hata_constant_db(double f_mhz, double h_ap_m, double h_user_m);

/// Three-slope path loss in dB (a negative gain). Distances in km.
/// Exponent 3.5 beyond d1, 2 between d0 and d1, 0 below d0; continuous
/// at both breakpoints.
double path_loss_db(double d_km, double d0_km, double d1_km, double L_db);

/// Draw the two-component correlated shadowing field. a and b are
/// zero-mean unit-variance Gaussian vectors with covariance
/// 2^(-d/d_decorr) under the wrap-around distance, mixed as
/// z = sqrt(delta) a + sqrt(1-delta) b.
///
/// Throws std::runtime_error if a covariance matrix is not positive
/// semidefinite beyond a 1e-10 eigenvalue jitter budget.
Shadowing draw_shadowing(const Layout& layout, double delta, double d_decorr,
                         std::uint64_t seed);

/// Uncorrelated variant: z i.i.d. N(0,1), a and b left empty.
Shadowing draw_shadowing_uncorrelated(int M, int K, std::uint64_t seed);

/// Assemble beta from path loss and shadowing. Shadowing is applied only
/// where the AP-user distance exceeds d1; the full z matrix is drawn
/// regardless and masked here, so RNG consumption does not depend on the
/// geometry.
LargeScaleState large_scale_matrix(const Layout& layout, const SimConfig& config,
                                   const Shadowing& shadowing);

/// Noise power from bandwidth, Boltzmann constant, T0 = 290 K and the
/// noise figure; SNRs as the power/noise ratios with the small-cell
/// scalings applied.
NormalizedSnrs noise_and_snrs(const SimConfig& config);

}  // namespace cfmimo
