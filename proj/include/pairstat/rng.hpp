#ifndef PAIRSTAT_RNG_HPP_
#define PAIRSTAT_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

#include "pairstat/workload.hpp"

namespace pairstat {

/// splitmix64 finalizer; the mixing primitive behind seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a over a tag string, for naming sub-streams ("round1", "dataset", ...).
std::uint64_t tag_hash(std::string_view tag);

/// Derives an independent stream seed from a master seed and a list of
/// components (trial index, user index, hashed round tag, ...). Each
/// component is absorbed through a splitmix64 round, so streams for
/// different component tuples are uncorrelated for simulation purposes.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> parts);

/// Deterministic random stream: std::mt19937_64 engine (bit-exact across
/// platforms) with self-contained distribution transforms, so sampled values
/// depend only on the seed, never on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1]; safe for logs.
  double uniform_open01() { return 1.0 - uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);

  /// Standard normal via Box-Muller (two uniforms per pair, second cached).
  double normal();

  /// Zero-mean Laplace with scale b, by inverse CDF from one 64-bit uniform.
  double laplace(double b);

  Vector normal_vector(int d);

  /// Uniform on the unit sphere S^{d-1}.
  Vector unit_sphere(int d);

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace pairstat

#endif  // PAIRSTAT_RNG_HPP_
