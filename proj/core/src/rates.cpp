#include "cfmimo/rates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "cfmimo/expint.hpp"
#include "cfmimo/rng.hpp"

namespace cfmimo {

namespace {

constexpr double kPowerSlack = 1e-9;

double log2_1p(double x) { return std::log1p(x) * 1.4426950408889634074; }

// Compensated (Kahan) accumulator; beta spans many orders of magnitude
// within one drop, so the M-sums are assembled this way.
class Kahan {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double sum() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void check_dl_power(const Eigen::MatrixXd& eta, const Eigen::MatrixXd& gamma) {
  if (eta.rows() != gamma.rows() || eta.cols() != gamma.cols())
    throw std::invalid_argument("dl rate: eta/gamma size mismatch");
  if (eta.minCoeff() < 0.0) throw std::invalid_argument("dl rate: eta must be nonnegative");
  for (int m = 0; m < eta.rows(); ++m) {
    Kahan acc;
    for (int k = 0; k < eta.cols(); ++k) acc.add(eta(m, k) * gamma(m, k));
    if (acc.sum() > 1.0 + kPowerSlack)
      throw std::invalid_argument("dl rate: per-AP power constraint violated");
  }
}

std::complex<double> cgauss(Rng& rng) {
  // CN(0,1): independent real and imaginary parts of variance 1/2.
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  return {rng.normal() * kInvSqrt2, rng.normal() * kInvSqrt2};
}

}  // namespace

const char* system_name(System s) {
  switch (s) {
    case System::CellFreeDl: return "cf-dl";
    case System::CellFreeUl: return "cf-ul";
    case System::SmallCellDl: return "sc-dl";
    case System::SmallCellUl: return "sc-ul";
  }
  return "?";
}

Eigen::VectorXd dl_sinr_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                                 const Eigen::MatrixXd& eta, const Eigen::MatrixXd& gram2,
                                 double rho_d) {
  const int M = static_cast<int>(beta.rows());
  const int K = static_cast<int>(beta.cols());
  check_dl_power(eta, gamma);

  // w_m = sum_k' eta_mk' gamma_mk' (total per-AP normalized power).
  Eigen::VectorXd w(M);
  for (int m = 0; m < M; ++m) {
    Kahan acc;
    for (int k = 0; k < K; ++k) acc.add(eta(m, k) * gamma(m, k));
    w(m) = acc.sum();
  }

  Eigen::MatrixXd sqrt_eta = eta.array().sqrt().matrix();
  Eigen::VectorXd sinr(K);
  for (int k = 0; k < K; ++k) {
    Kahan num;
    for (int m = 0; m < M; ++m) num.add(sqrt_eta(m, k) * gamma(m, k));
    const double ds = num.sum();

    Kahan den;
    den.add(1.0 / rho_d);
    for (int kp = 0; kp < K; ++kp) {
      if (kp == k || gram2(k, kp) == 0.0) continue;
      Kahan contam;
      for (int m = 0; m < M; ++m)
        contam.add(sqrt_eta(m, kp) * gamma(m, kp) * beta(m, k) / beta(m, kp));
      den.add(gram2(k, kp) * contam.sum() * contam.sum());
    }
    Kahan bu;
    for (int m = 0; m < M; ++m) bu.add(beta(m, k) * w(m));
    den.add(bu.sum());
    sinr(k) = ds * ds / den.sum();
  }
  return sinr;
}

RateVector dl_rate_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                            const Eigen::MatrixXd& eta, const Eigen::MatrixXd& gram2,
                            double rho_d) {
  RateVector r;
  r.system = System::CellFreeDl;
  r.per_user_rate = dl_sinr_cellfree(beta, gamma, eta, gram2, rho_d)
                        .unaryExpr([](double s) { return log2_1p(s); });
  return r;
}

RateVector dl_rate_collocated(const Eigen::VectorXd& gamma, const Eigen::VectorXd& beta,
                              const Eigen::VectorXd& eta, int M, double rho_d) {
  const int K = static_cast<int>(gamma.size());
  const double eta_sum = eta.sum();
  RateVector r;
  r.system = System::CellFreeDl;
  r.per_user_rate.resize(K);
  for (int k = 0; k < K; ++k) {
    const double s = M * rho_d * gamma(k) * eta(k) / (rho_d * beta(k) * eta_sum + 1.0);
    r.per_user_rate(k) = log2_1p(s);
  }
  return r;
}

Eigen::VectorXd ul_sinr_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                                 const Eigen::VectorXd& eta_u, const Eigen::MatrixXd& gram2,
                                 double rho_u) {
  const int M = static_cast<int>(beta.rows());
  const int K = static_cast<int>(beta.cols());
  if (eta_u.minCoeff() < 0.0 || eta_u.maxCoeff() > 1.0 + kPowerSlack)
    throw std::invalid_argument("ul rate: eta must lie in [0,1]");

  Eigen::VectorXd sinr(K);
  for (int k = 0; k < K; ++k) {
    Kahan sk;
    for (int m = 0; m < M; ++m) sk.add(gamma(m, k));
    const double gamma_sum = sk.sum();

    Kahan den;
    den.add(gamma_sum / rho_u);
    for (int kp = 0; kp < K; ++kp) {
      Kahan cross;
      for (int m = 0; m < M; ++m) cross.add(gamma(m, k) * beta(m, kp));
      den.add(eta_u(kp) * cross.sum());
      if (kp == k || gram2(k, kp) == 0.0) continue;
      Kahan contam;
      for (int m = 0; m < M; ++m) contam.add(gamma(m, k) * beta(m, kp) / beta(m, k));
      den.add(eta_u(kp) * gram2(k, kp) * contam.sum() * contam.sum());
    }
    sinr(k) = eta_u(k) * gamma_sum * gamma_sum / den.sum();
  }
  return sinr;
}

RateVector ul_rate_cellfree(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                            const Eigen::VectorXd& eta_u, const Eigen::MatrixXd& gram2,
                            double rho_u) {
  RateVector r;
  r.system = System::CellFreeUl;
  r.per_user_rate = ul_sinr_cellfree(beta, gamma, eta_u, gram2, rho_u)
                        .unaryExpr([](double s) { return log2_1p(s); });
  return r;
}

RateVector ul_rate_collocated(const Eigen::VectorXd& gamma, const Eigen::VectorXd& beta,
                              const Eigen::VectorXd& eta, int M, double rho_u) {
  const int K = static_cast<int>(gamma.size());
  double den = 1.0;
  for (int k = 0; k < K; ++k) den += rho_u * eta(k) * beta(k);
  RateVector r;
  r.system = System::CellFreeUl;
  r.per_user_rate.resize(K);
  for (int k = 0; k < K; ++k)
    r.per_user_rate(k) = log2_1p(M * rho_u * eta(k) * gamma(k) / den);
  return r;
}

GenieDlRate genie_dl_rate_mc(const Eigen::MatrixXd& beta, const Eigen::MatrixXd& gamma,
                             const Eigen::MatrixXd& c, const Eigen::MatrixXd& eta,
                             const PilotPlan& plan, double rho_d, double rho_p, int tau,
                             int n_samples, std::uint64_t seed) {
  const int M = static_cast<int>(beta.rows());
  const int K = static_cast<int>(beta.cols());
  if (n_samples < 1) throw std::invalid_argument("genie_dl_rate_mc: n_samples must be >= 1");
  check_dl_power(eta, gamma);

  const double pilot_amp = std::sqrt(static_cast<double>(tau) * rho_p);
  const Eigen::MatrixXd sqrt_eta = eta.array().sqrt().matrix();
  const Eigen::MatrixXd sqrt_beta = beta.array().sqrt().matrix();

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(K);
  Eigen::VectorXd m2 = Eigen::VectorXd::Zero(K);
  Eigen::MatrixXcd g(M, K), ghat(M, K);
  Eigen::MatrixXcd pilot_noise(M, tau);

  Rng rng = Rng(seed).stream(kGenie);
  for (int it = 0; it < n_samples; ++it) {
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < M; ++m) g(m, k) = sqrt_beta(m, k) * cgauss(rng);
    for (int p = 0; p < tau; ++p)
      for (int m = 0; m < M; ++m) pilot_noise(m, p) = cgauss(rng);

    // Projected pilot observation per (m, pilot index), then MMSE scale.
    for (int k = 0; k < K; ++k) {
      const int p = plan.assign[k];
      for (int m = 0; m < M; ++m) {
        std::complex<double> y = pilot_noise(m, p);
        for (int kp = 0; kp < K; ++kp)
          if (plan.assign[kp] == p) y += pilot_amp * g(m, kp);
        ghat(m, k) = c(m, k) * y;
      }
    }

    // a(k,k') = sum_m eta_mk'^{1/2} g_mk ghat_mk'^*
    Eigen::MatrixXcd a = g.transpose() * (sqrt_eta.array() * ghat.conjugate().array()).matrix();
    for (int k = 0; k < K; ++k) {
      double interf = 0.0;
      for (int kp = 0; kp < K; ++kp)
        if (kp != k) interf += std::norm(a(k, kp));
      const double sinr = rho_d * std::norm(a(k, k)) / (rho_d * interf + 1.0);
      const double x = log2_1p(sinr);
      const double d = x - mean(k);
      mean(k) += d / (it + 1);
      m2(k) += d * (x - mean(k));
    }
  }

  GenieDlRate out;
  out.rate.system = System::CellFreeDl;
  out.rate.per_user_rate = mean;
  out.std_err.resize(K);
  for (int k = 0; k < K; ++k)
    out.std_err(k) = n_samples > 1 ? std::sqrt(m2(k) / (n_samples - 1) / n_samples) : 0.0;
  return out;
}

double smallcell_rate(double mu_bar) {
  if (!(mu_bar > 0)) throw std::domain_error("smallcell_rate: mu_bar must be positive");
  constexpr double kLog2E = 1.4426950408889634074;
  constexpr double kEulerGamma = 0.5772156649015328606;
  if (mu_bar > 1e12) return kLog2E * (std::log(mu_bar) - kEulerGamma);
  return kLog2E * expe1_scaled(1.0 / mu_bar);
}

Eigen::VectorXd smallcell_effective_sinr(System system, const Eigen::VectorXd& est,
                                         const Eigen::MatrixXd& beta,
                                         const std::vector<int>& serving_ap,
                                         const Eigen::VectorXd& alpha, double rho) {
  const int K = static_cast<int>(serving_ap.size());
  if (system != System::SmallCellDl && system != System::SmallCellUl)
    throw std::invalid_argument("smallcell_effective_sinr: not a small-cell system");
  if (alpha.minCoeff() < 0.0 || alpha.maxCoeff() > 1.0 + kPowerSlack)
    throw std::invalid_argument("smallcell_effective_sinr: alpha must lie in [0,1]");

  Eigen::VectorXd out(K);
  for (int k = 0; k < K; ++k) {
    const double bk = beta(serving_ap[k], k);
    double den = 1.0 + rho * alpha(k) * (bk - est(k));
    for (int kp = 0; kp < K; ++kp) {
      if (kp == k) continue;
      const double cross = system == System::SmallCellDl ? beta(serving_ap[kp], k)
                                                         : beta(serving_ap[k], kp);
      den += rho * alpha(kp) * cross;
    }
    out(k) = rho * alpha(k) * est(k) / den;
  }
  return out;
}

std::vector<LargeMDiagnosticRow> large_m_diagnostic(const Eigen::MatrixXd& beta,
                                                    const PilotPlan& plan, double rho_d,
                                                    double rho_p, int tau,
                                                    const std::vector<int>& m_values,
                                                    int user_index, int n_samples,
                                                    std::uint64_t seed) {
  const int K = static_cast<int>(beta.cols());
  const int k = user_index;
  if (k < 0 || k >= K) throw std::invalid_argument("large_m_diagnostic: bad user index");

  std::vector<LargeMDiagnosticRow> rows;
  const double pilot_amp = std::sqrt(static_cast<double>(tau) * rho_p);
  for (std::size_t mi = 0; mi < m_values.size(); ++mi) {
    const int M = m_values[mi];
    if (M > beta.rows()) throw std::invalid_argument("large_m_diagnostic: M exceeds beta rows");
    const Eigen::MatrixXd b = beta.topRows(M);
    const CellFreeStats st = cellfree_estimation_stats(b, plan, tau, rho_p);
    // Uniform full-power allocation.
    Eigen::MatrixXd eta(M, K);
    for (int m = 0; m < M; ++m) eta.row(m).setConstant(1.0 / st.gamma.row(m).sum());
    const Eigen::MatrixXd sqrt_eta = eta.array().sqrt().matrix();
    const Eigen::MatrixXd sqrt_beta = b.array().sqrt().matrix();

    // Deterministic limits of (1/M) DS_k and (1/M) MUI_k (unit symbols).
    const double amp = std::sqrt(rho_d) * pilot_amp;
    double ds_lim = 0.0;
    Eigen::VectorXd mui_lim = Eigen::VectorXd::Zero(K);
    for (int m = 0; m < M; ++m) ds_lim += sqrt_eta(m, k) * st.c(m, k) * b(m, k);
    ds_lim *= amp / M;
    for (int kp = 0; kp < K; ++kp) {
      if (kp == k || plan.assign[kp] != plan.assign[k]) continue;
      double s = 0.0;
      for (int m = 0; m < M; ++m) s += sqrt_eta(m, kp) * st.c(m, kp) * b(m, k);
      mui_lim(kp) = amp * s / M;
    }

    Rng rng = Rng(seed).stream(kDiagnostics, static_cast<std::uint64_t>(mi));
    Eigen::MatrixXcd g(M, K), ghat(M, K);
    Eigen::MatrixXcd pilot_noise(M, tau);
    double ds_mean_re = 0, ds_mean_im = 0, ds_m2 = 0;
    double mui_mean_re = 0, mui_mean_im = 0, mui_m2 = 0;
    for (int it = 0; it < n_samples; ++it) {
      for (int kp = 0; kp < K; ++kp)
        for (int m = 0; m < M; ++m) g(m, kp) = sqrt_beta(m, kp) * cgauss(rng);
      for (int p = 0; p < tau; ++p)
        for (int m = 0; m < M; ++m) pilot_noise(m, p) = cgauss(rng);
      for (int kp = 0; kp < K; ++kp) {
        const int p = plan.assign[kp];
        for (int m = 0; m < M; ++m) {
          std::complex<double> y = pilot_noise(m, p);
          for (int kq = 0; kq < K; ++kq)
            if (plan.assign[kq] == p) y += pilot_amp * g(m, kq);
          ghat(m, kp) = st.c(m, kp) * y;
        }
      }
      // Random unit-modulus symbols.
      std::vector<std::complex<double>> q(K);
      for (int kp = 0; kp < K; ++kp) {
        const double th = 6.283185307179586 * rng.uniform01();
        q[kp] = {std::cos(th), std::sin(th)};
      }
      std::complex<double> ds = 0.0, mui = 0.0;
      for (int m = 0; m < M; ++m)
        ds += sqrt_eta(m, k) * g(m, k) * std::conj(ghat(m, k));
      ds = std::sqrt(rho_d) / M * ds * q[k] - ds_lim * q[k];
      for (int kp = 0; kp < K; ++kp) {
        if (kp == k) continue;
        std::complex<double> s = 0.0;
        for (int m = 0; m < M; ++m)
          s += sqrt_eta(m, kp) * g(m, k) * std::conj(ghat(m, kp));
        mui += (std::sqrt(rho_d) / M * s - mui_lim(kp)) * q[kp];
      }
      // Streaming complex variance (mean |x - mean|^2).
      const double n1 = it + 1;
      double dre = ds.real() - ds_mean_re, dim = ds.imag() - ds_mean_im;
      ds_mean_re += dre / n1;
      ds_mean_im += dim / n1;
      ds_m2 += dre * (ds.real() - ds_mean_re) + dim * (ds.imag() - ds_mean_im);
      dre = mui.real() - mui_mean_re;
      dim = mui.imag() - mui_mean_im;
      mui_mean_re += dre / n1;
      mui_mean_im += dim / n1;
      mui_m2 += dre * (mui.real() - mui_mean_re) + dim * (mui.imag() - mui_mean_im);
    }
    LargeMDiagnosticRow row;
    row.M = M;
    row.var_ds_dev = ds_m2 / std::max(1, n_samples - 1);
    row.var_mui_dev = mui_m2 / std::max(1, n_samples - 1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cfmimo
