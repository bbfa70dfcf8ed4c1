#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "cfmimo/channel_stats.hpp"

namespace cfmimo {

/// Baseline assignment: i.i.d. uniform pilot indices in [0, tau). When
/// tau >= K there is no need to share, so users get the K distinct
/// pilots 0..K-1 instead.
std::vector<int> random_assignment(int K, int tau, std::uint64_t seed);

/// Contamination incurred by user k_star if it were to use `candidate`:
/// sum over all APs of beta_mk' for every other user k' currently on that
/// pilot. (With an orthonormal book the Gram factor is 1 for sharers and
/// 0 otherwise.)
double contamination_score(const Eigen::MatrixXd& beta, const PilotPlan& plan, int k_star,
                           int candidate);

enum class SmallCellSide { Dl, Ul };

/// Small-cell variant of the score, restricted to the APs that actually
/// interfere with user k_star's estimate: for the downlink the other
/// users' serving APs (beta_{m_{k'} k_star}), for the uplink the user's
/// own serving AP (beta_{m_{k_star} k'}).
double smallcell_contamination_score(const Eigen::MatrixXd& beta, const PilotPlan& plan,
                                     const std::vector<int>& serving_ap, SmallCellSide side,
                                     int k_star, int candidate);

/// Iterative refinement of a random assignment: N times, find the user
/// with the lowest closed-form downlink rate under the uniform full-power
/// allocation, and move it to the pilot with the smallest contamination
/// score. Ties (in rate and in score) break to the lowest index.
PilotPlan greedy_assign_cellfree(const Eigen::MatrixXd& beta, int tau, double rho_p,
                                 double rho_d, int N, std::uint64_t seed);

/// Small-cell variant: the worst user is the one with the lowest
/// small-cell rate on the side being refined, and the contamination score
/// is restricted to the relevant single AP row (the other users' serving
/// APs for the downlink, the user's own serving AP for the uplink).
PilotPlan greedy_assign_smallcell(const Eigen::MatrixXd& beta,
                                  const std::vector<int>& serving_ap, int tau, int N,
                                  std::uint64_t seed, SmallCellSide side, double rho_pilot,
                                  double rho_data);

}  // namespace cfmimo
