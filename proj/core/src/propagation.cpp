#include "cfmimo/propagation.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace cfmimo {

double hata_constant_db(double f_mhz, double h_ap_m, double h_user_m) {
  if (!(f_mhz > 0 && h_ap_m > 0 && h_user_m > 0))
    throw std::invalid_argument("hata_constant_db: arguments must be positive");
  const double lf = std::log10(f_mhz);
  return 46.3 + 33.9 * lf - 13.82 * std::log10(h_ap_m) - (1.1 * lf - 0.7) * h_user_m +
         (1.56 * lf - 0.8);
}

double path_loss_db(double d_km, double d0_km, double d1_km, double L_db) {
  if (!(d_km >= 0) || !(d0_km > 0) || !(d0_km <= d1_km))
    throw std::invalid_argument("path_loss_db: need d >= 0 and 0 < d0 <= d1");
  if (d_km > d1_km) return -L_db - 35.0 * std::log10(d_km);
  if (d_km > d0_km) return -L_db - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d_km);
  return -L_db - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d0_km);
}

namespace {

// Correlated N(0, Cov) draw via the symmetric square root of Cov.
// Eigenvalues within the jitter budget of zero are clamped; anything more
// negative is a model error (the 2^(-d/d_decorr) kernel is not guaranteed
// PSD under the torus metric).
Eigen::VectorXd correlated_normal(const Eigen::MatrixXd& cov, Rng& rng) {
  constexpr double kJitter = 1e-10;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("draw_shadowing: eigendecomposition failed");
  Eigen::VectorXd lam = es.eigenvalues();
  if (lam.minCoeff() < -kJitter)
    throw std::runtime_error(
        "draw_shadowing: shadowing covariance is not positive semidefinite "
        "(minimum eigenvalue below the 1e-10 jitter budget)");
  const int n = static_cast<int>(lam.size());
  Eigen::VectorXd xi(n);
  for (int i = 0; i < n; ++i) xi(i) = rng.normal();
  for (int i = 0; i < n; ++i) lam(i) = std::sqrt(std::max(lam(i), 0.0));
  return es.eigenvectors() * (lam.asDiagonal() * (es.eigenvectors().transpose() * xi));
}

Eigen::MatrixXd decorrelation_cov(const Eigen::Matrix<double, Eigen::Dynamic, 2>& xy,
                                  double D, double d_decorr) {
  const int n = static_cast<int>(xy.rows());
  Eigen::MatrixXd cov(n, n);
  for (int i = 0; i < n; ++i) {
    cov(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double d = wrap_distance(xy(i, 0), xy(i, 1), xy(j, 0), xy(j, 1), D);
      cov(i, j) = cov(j, i) = std::exp2(-d / d_decorr);
    }
  }
  return cov;
}

}  // namespace

Shadowing draw_shadowing(const Layout& layout, double delta, double d_decorr,
                         std::uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::invalid_argument("draw_shadowing: delta must lie in [0,1]");
  if (!(d_decorr > 0)) throw std::invalid_argument("draw_shadowing: d_decorr must be positive");

  const int M = static_cast<int>(layout.ap_xy.rows());
  const int K = static_cast<int>(layout.user_xy.rows());
  Rng rng_a = Rng(seed).stream(0);
  Rng rng_b = Rng(seed).stream(1);

  Shadowing sh;
  sh.a = correlated_normal(decorrelation_cov(layout.ap_xy, layout.D, d_decorr), rng_a);
  sh.b = correlated_normal(decorrelation_cov(layout.user_xy, layout.D, d_decorr), rng_b);

  const double wa = std::sqrt(delta);
  const double wb = std::sqrt(1.0 - delta);
  sh.z.resize(M, K);
  for (int k = 0; k < K; ++k)
    for (int m = 0; m < M; ++m) sh.z(m, k) = wa * sh.a(m) + wb * sh.b(k);
  return sh;
}

Shadowing draw_shadowing_uncorrelated(int M, int K, std::uint64_t seed) {
  Shadowing sh;
  sh.z.resize(M, K);
  Rng rng(seed);
  for (int k = 0; k < K; ++k)
    for (int m = 0; m < M; ++m) sh.z(m, k) = rng.normal();
  return sh;
}

LargeScaleState large_scale_matrix(const Layout& layout, const SimConfig& config,
                                   const Shadowing& shadowing) {
  const int M = static_cast<int>(layout.ap_xy.rows());
  const int K = static_cast<int>(layout.user_xy.rows());
  if (shadowing.z.rows() != M || shadowing.z.cols() != K)
    throw std::invalid_argument("large_scale_matrix: shadowing shape mismatch");

  const double L = hata_constant_db(config.f, config.hAP, config.hu);
  LargeScaleState st;
  st.z = shadowing.z;
  st.a = shadowing.a;
  st.b = shadowing.b;
  st.pl_db.resize(M, K);
  st.beta.resize(M, K);
  for (int k = 0; k < K; ++k) {
    for (int m = 0; m < M; ++m) {
      const double d = wrap_distance(layout.ap_xy(m, 0), layout.ap_xy(m, 1),
                                     layout.user_xy(k, 0), layout.user_xy(k, 1), layout.D);
      const double pl = path_loss_db(d, config.d0, config.d1, L);
      st.pl_db(m, k) = pl;
      // No shadowing at short range (d <= d1), per-(m,k) pair.
      const double sh_db = d > config.d1 ? config.sigma_sh * shadowing.z(m, k) : 0.0;
      st.beta(m, k) = std::pow(10.0, (pl + sh_db) / 10.0);
    }
  }
  return st;
}

NormalizedSnrs noise_and_snrs(const SimConfig& config) {
  config.validate();
  constexpr double kBoltzmann = 1.381e-23;  // J/K
  constexpr double kT0 = 290.0;             // K
  NormalizedSnrs s;
  s.noise_w = config.B * kBoltzmann * kT0 * std::pow(10.0, config.noise_figure_db / 10.0);
  s.rho_d_cf = config.p_dl / s.noise_w;
  s.rho_u_cf = config.p_ul / s.noise_w;
  s.rho_p_cf = config.p_pilot / s.noise_w;
  s.rho_d_sc = (static_cast<double>(config.M) / config.K) * s.rho_d_cf;
  s.rho_u_sc = s.rho_u_cf;
  s.rho_dp_sc = s.rho_p_cf;
  s.rho_up_sc = s.rho_p_cf;
  return s;
}

}  // namespace cfmimo
