#pragma once

#include <Eigen/Core>

#include <vector>

namespace cfmimo {

/// Orthonormal pilot book plus the per-user assignment and the Gram
/// magnitude table |phi_k^H phi_k'|^2.
///
/// The book is the standard orthonormal basis, so gram2 entries are
/// exactly 0 or 1: 1 iff two users share a pilot index. Only gram2 enters
/// any rate or power-control formula.
struct PilotPlan {
  int tau = 0;              ///< pilot length (number of orthogonal pilots)
  Eigen::MatrixXd book;     ///< tau x tau identity (columns are the pilots)
  std::vector<int> assign;  ///< K indices into the book, 0-based
  Eigen::MatrixXd gram2;    ///< K x K, symmetric, unit diagonal

  bool share_pilot(int k, int kp) const { return assign[k] == assign[kp]; }
};

/// Second-order cell-free estimation statistics.
struct CellFreeStats {
  Eigen::MatrixXd c;      ///< M x K MMSE projection coefficients
  Eigen::MatrixXd gamma;  ///< M x K estimate variances, 0 < gamma <= beta
};

/// Second-order small-cell estimation statistics.
struct SmallCellStats {
  std::vector<int> serving_ap;  ///< K AP indices, distinct
  Eigen::VectorXd mu;           ///< K downlink estimate variances
  Eigen::VectorXd omega;        ///< K uplink estimate variances
};

/// Build a PilotPlan from a 0-based assignment into a book of length tau.
/// Throws std::out_of_range for indices outside [0, tau).
PilotPlan make_pilot_plan(int tau, const std::vector<int>& assign);

/// MMSE estimation statistics for the cell-free uplink training:
///   c_mk     = sqrt(tau rho_p) beta_mk /
///              (tau rho_p sum_k' beta_mk' gram2(k,k') + 1)
///   gamma_mk = sqrt(tau rho_p) beta_mk c_mk
CellFreeStats cellfree_estimation_stats(const Eigen::MatrixXd& beta, const PilotPlan& plan,
                                        int tau, double rho_p);

/// Greedy small-cell AP selection: users claim, in the given order, the
/// still-available AP with the largest beta (ties to the lowest index).
/// Throws std::invalid_argument when M < K (some user would be unservable).
std::vector<int> select_aps(const Eigen::MatrixXd& beta, const std::vector<int>& user_order);

/// Small-cell downlink estimate variances. The interference sum runs over
/// the serving APs of the other users: beta_{m_{k'} k}.
Eigen::VectorXd smallcell_dl_stats(const Eigen::MatrixXd& beta,
                                   const std::vector<int>& serving_ap, int tau_sc_dl,
                                   double rho_dp_sc, const Eigen::MatrixXd& dl_gram2);

/// Small-cell uplink estimate variances. The interference sum runs over
/// the other users as seen by the serving AP: beta_{m_k k'}.
Eigen::VectorXd smallcell_ul_stats(const Eigen::MatrixXd& beta,
                                   const std::vector<int>& serving_ap, int tau_sc_ul,
                                   double rho_up_sc, const Eigen::MatrixXd& ul_gram2);

}  // namespace cfmimo
