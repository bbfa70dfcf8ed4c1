#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cfmimo {

/// Seedable random generator with named, splittable streams.
///
/// Streams are derived from a master seed and a list of integer tags via
/// the SplitMix64 finalizer, so that e.g. the shadowing stream of drop 17
/// is `Rng(seed).stream(17, kShadowing)` no matter how many draws other
/// streams consumed. All distribution transforms are implemented here
/// (not via std::*_distribution) so results are identical across standard
/// libraries; the engine itself (mt19937_64) is fully specified by the
/// C++ standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  /// SplitMix64 finalizer; also used standalone to hash tag sequences.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Derived-stream seed: fold tags into the master seed one mix at a time.
  template <class... Tags>
  static std::uint64_t derive(std::uint64_t seed, Tags... tags) {
    std::uint64_t s = mix(seed);
    ((s = mix(s ^ static_cast<std::uint64_t>(tags))), ...);
    return s;
  }

  /// Child generator; independent of draws already made on this one.
  template <class... Tags>
  Rng stream(Tags... tags) const {
    return Rng(derive(seed_, tags...));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0,d).
  double uniform(double d) { return d * uniform01(); }

  /// Uniform integer in [0, n), bias-free.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  /// Standard normal via Box-Muller; second value of each pair is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Fisher-Yates permutation of {0,...,n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(uniform_index(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Stream tags for per-drop child streams; the documented derivation is
/// Rng(rng_seed).stream(drop_index, tag).
enum StreamTag : std::uint64_t {
  kLayout = 1,
  kShadowing = 2,
  kCellFreePilots = 3,
  kSmallCellDlPilots = 4,
  kSmallCellUlPilots = 5,
  kApSelectionOrder = 6,
  kGenie = 7,
  kDiagnostics = 8,
};

}  // namespace cfmimo
