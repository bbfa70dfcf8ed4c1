#include "cfmimo/channel_stats.hpp"

#include <cmath>
#include <stdexcept>

namespace cfmimo {

PilotPlan make_pilot_plan(int tau, const std::vector<int>& assign) {
  if (tau < 1) throw std::invalid_argument("make_pilot_plan: tau must be >= 1");
  const int K = static_cast<int>(assign.size());
  for (int k = 0; k < K; ++k)
    if (assign[k] < 0 || assign[k] >= tau)
      throw std::out_of_range("make_pilot_plan: pilot index out of range");

  PilotPlan plan;
  plan.tau = tau;
  plan.book = Eigen::MatrixXd::Identity(tau, tau);
  plan.assign = assign;
  plan.gram2.resize(K, K);
  for (int k = 0; k < K; ++k)
    for (int kp = 0; kp < K; ++kp) plan.gram2(k, kp) = assign[k] == assign[kp] ? 1.0 : 0.0;
  return plan;
}

CellFreeStats cellfree_estimation_stats(const Eigen::MatrixXd& beta, const PilotPlan& plan,
                                        int tau, double rho_p) {
  const int M = static_cast<int>(beta.rows());
  const int K = static_cast<int>(beta.cols());
  if (static_cast<int>(plan.assign.size()) != K || plan.gram2.rows() != K)
    throw std::invalid_argument("cellfree_estimation_stats: plan/beta size mismatch");
  if (!(beta.minCoeff() > 0))
    throw std::invalid_argument("cellfree_estimation_stats: beta must be positive");
  if (tau < 1 || !(rho_p > 0))
    throw std::invalid_argument("cellfree_estimation_stats: need tau >= 1 and rho_p > 0");

  const double trp = static_cast<double>(tau) * rho_p;
  const double sq_trp = std::sqrt(trp);
  CellFreeStats st;
  st.c.resize(M, K);
  st.gamma.resize(M, K);
  for (int k = 0; k < K; ++k) {
    for (int m = 0; m < M; ++m) {
      double den = 1.0;
      for (int kp = 0; kp < K; ++kp) den += trp * beta(m, kp) * plan.gram2(k, kp);
      st.c(m, k) = sq_trp * beta(m, k) / den;
      st.gamma(m, k) = sq_trp * beta(m, k) * st.c(m, k);
    }
  }
  return st;
}

std::vector<int> select_aps(const Eigen::MatrixXd& beta, const std::vector<int>& user_order) {
  const int M = static_cast<int>(beta.rows());
  const int K = static_cast<int>(beta.cols());
  if (static_cast<int>(user_order.size()) != K)
    throw std::invalid_argument("select_aps: order size must equal K");
  if (M < K)
    throw std::invalid_argument("select_aps: fewer APs than users, some user is unservable");

  std::vector<int> serving(K, -1);
  std::vector<bool> taken(M, false);
  for (int k : user_order) {
    int best = -1;
    for (int m = 0; m < M; ++m) {
      if (taken[m]) continue;
      if (best < 0 || beta(m, k) > beta(best, k)) best = m;
    }
    serving[k] = best;
    taken[best] = true;
  }
  return serving;
}

Eigen::VectorXd smallcell_dl_stats(const Eigen::MatrixXd& beta,
                                   const std::vector<int>& serving_ap, int tau_sc_dl,
                                   double rho_dp_sc, const Eigen::MatrixXd& dl_gram2) {
  const int K = static_cast<int>(serving_ap.size());
  const double trp = static_cast<double>(tau_sc_dl) * rho_dp_sc;
  Eigen::VectorXd mu(K);
  for (int k = 0; k < K; ++k) {
    const double bk = beta(serving_ap[k], k);
    double den = 1.0;
    for (int kp = 0; kp < K; ++kp)
      den += trp * beta(serving_ap[kp], k) * dl_gram2(k, kp);
    mu(k) = trp * bk * bk / den;
  }
  return mu;
}

Eigen::VectorXd smallcell_ul_stats(const Eigen::MatrixXd& beta,
                                   const std::vector<int>& serving_ap, int tau_sc_ul,
                                   double rho_up_sc, const Eigen::MatrixXd& ul_gram2) {
  const int K = static_cast<int>(serving_ap.size());
  const double trp = static_cast<double>(tau_sc_ul) * rho_up_sc;
  Eigen::VectorXd omega(K);
  for (int k = 0; k < K; ++k) {
    const double bk = beta(serving_ap[k], k);
    double den = 1.0;
    for (int kp = 0; kp < K; ++kp)
      den += trp * beta(serving_ap[k], kp) * ul_gram2(k, kp);
    omega(k) = trp * bk * bk / den;
  }
  return omega;
}

}  // namespace cfmimo
