#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cfmimo {

/// Every physical and protocol parameter of a scenario. Defaults follow
/// the standard urban evaluation setup (1.9 GHz carrier, 20 MHz band,
/// 1 km wrap-around square, 200/100/100 mW radiated powers).
///
/// Loadable from a flat key-value text file; keys are exactly the field
/// names below (see load_config).
struct SimConfig {
  int M = 100;               ///< AP count
  int K = 40;                ///< user count
  double D = 1.0;            ///< square side (km)
  double d0 = 0.010;         ///< inner path-loss breakpoint (km)
  double d1 = 0.050;         ///< outer path-loss breakpoint (km)
  double f = 1900.0;         ///< carrier frequency (MHz)
  double hAP = 15.0;         ///< AP antenna height (m)
  double hu = 1.65;          ///< user antenna height (m)
  double sigma_sh = 8.0;     ///< shadowing standard deviation (dB)
  double delta = 0.5;        ///< AP/user shadowing mixing weight in [0,1]
  double d_decorr = 0.1;     ///< shadowing decorrelation distance (km)
  bool shadowing_correlated = false;
  double B = 20e6;           ///< bandwidth (Hz)
  double noise_figure_db = 9.0;
  double p_dl = 0.2;         ///< downlink data power (W)
  double p_ul = 0.1;         ///< uplink data power (W)
  double p_pilot = 0.1;      ///< pilot power (W)
  int tau_c = 200;           ///< coherence interval (samples)
  int tau_cf = 20;           ///< cell-free uplink training length (samples)
  int tau_sc_dl = 20;        ///< small-cell downlink training length
  int tau_sc_ul = 20;        ///< small-cell uplink training length
  int greedy_iters = -1;     ///< greedy pilot iterations; -1 means auto (2K)
  int n_drops = 200;
  std::uint64_t rng_seed = 1;

  /// Resolved iteration count for the greedy pilot assignment.
  int effective_greedy_iters() const { return greedy_iters < 0 ? 2 * K : greedy_iters; }

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

/// Parse a flat key-value config ("key = value" or "key value", '#'
/// comments). Unknown keys are an error; omitted keys keep defaults.
/// The returned config has been validated.
SimConfig load_config(const std::string& path);
SimConfig parse_config(std::istream& in, const std::string& origin = "<stream>");

}  // namespace cfmimo
