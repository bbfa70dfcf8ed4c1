#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "cfmimo/channel_stats.hpp"

namespace cfmimo {

enum class System { CellFreeDl, CellFreeUl, SmallCellDl, SmallCellUl };

const char* system_name(System s);

/// Per-user achievable rates in bits/s/Hz.
struct RateVector {
  Eigen::VectorXd per_user_rate;
  System system = System::CellFreeDl;

  double min() const { return per_user_rate.minCoeff(); }
};

/// Closed-form cell-free downlink rate with conjugate beamforming:
/// coherent numerator rho_d (sum_m eta_mk^{1/2} gamma_mk)^2 over the
/// pilot-contamination, beamforming-uncertainty and noise terms.
/// eta is M x K; requires sum_k eta_mk gamma_mk <= 1 (+1e-9) per AP.
RateVector dl_rate_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                            const Eigen::MatrixXd& eta, const Eigen::MatrixXd& gram2,
                            double rho_d);

/// Per-user SINRs of the same expression (rate = log2(1+sinr)).
Eigen::VectorXd dl_sinr_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                                 const Eigen::MatrixXd& eta, const Eigen::MatrixXd& gram2,
                                 double rho_d);

/// Collocated special case (all APs at one site, total power constraint,
/// orthogonal pilots): log2(1 + M rho_d gamma_k eta_k /
/// (rho_d beta_k sum_k' eta_k' + 1)).
RateVector dl_rate_collocated(const Eigen::VectorXd& gamma, const Eigen::VectorXd& beta,
                              const Eigen::VectorXd& eta, int M, double rho_d);

/// Closed-form cell-free uplink rate with matched filtering.
/// eta_u is the K-vector of user power coefficients in [0,1].
RateVector ul_rate_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                            const Eigen::VectorXd& eta_u, const Eigen::MatrixXd& gram2,
                            double rho_u);

Eigen::VectorXd ul_sinr_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                                 const Eigen::VectorXd& eta_u, const Eigen::MatrixXd& gram2,
                                 double rho_u);

/// Collocated uplink special case: log2(1 + M rho_u eta_k gamma_k /
/// (rho_u sum_k' eta_k' beta_k' + 1)).
RateVector ul_rate_collocated(const Eigen::VectorXd& gamma, const Eigen::VectorXd& beta,
                              const Eigen::VectorXd& eta, int M, double rho_u);

/// Monte Carlo estimate of the genie-aided downlink rate, where each user
/// knows its instantaneous effective channel gain. Averages
/// log2(1 + SINR(g, ghat)) over n_samples joint draws of the small-scale
/// fading and the pilot noise (estimates regenerated per draw).
struct GenieDlRate {
  RateVector rate;
  Eigen::VectorXd std_err;  ///< Monte Carlo standard error per user
};
GenieDlRate genie_dl_rate_mc(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                             const Eigen::MatrixXd& c, const Eigen::MatrixXd& eta,
                             const PilotPlan& plan, double rho_d, double rho_p, int tau,
                             int n_samples, std::uint64_t seed);

/// Rayleigh-faded single-link rate E{log2(1 + mu_bar X)}, X ~ Exp(1), in
/// closed form: -(log2 e) e^{1/mu_bar} Ei(-1/mu_bar). Monotone increasing
/// in mu_bar; evaluated via the scaled continued fraction so it never
/// overflows, with the logarithmic expansion above mu_bar = 1e12.
double smallcell_rate(double mu_bar);

/// Effective mean SINRs of the small-cell links. alpha in [0,1]^K.
/// Downlink: interferer k' contributes beta_{m_{k'} k}; uplink:
/// beta_{m_k k'}. `est` is mu (downlink) or omega (uplink).
Eigen::VectorXd smallcell_effective_sinr(System system, const Eigen::VectorXd& est,
                                         const Eigen::MatrixXd& beta,
                                         const std::vector<int>& serving_ap,
                                         const Eigen::VectorXd& alpha, double rho);

/// Large-M concentration diagnostic: for each M in m_values (rows of beta
/// truncated accordingly), simulate the normalized desired-signal and
/// multiuser-interference terms of the received downlink signal and
/// report the empirical variance of their deviation from the
/// deterministic limits. Uses the uniform full-power allocation.
struct LargeMDiagnosticRow {
  int M = 0;
  double var_ds_dev = 0;   ///< variance of (1/M) DS_k deviation
  double var_mui_dev = 0;  ///< variance of (1/M) MUI_k deviation
};
std::vector<LargeMDiagnosticRow> large_m_diagnostic(const Eigen::MatrixXd& beta,
                                                    const PilotPlan& plan, double rho_d,
                                                    double rho_p, int tau,
                                                    const std::vector<int>& m_values,
                                                    int user_index, int n_samples,
                                                    std::uint64_t seed);

}  // namespace cfmimo
