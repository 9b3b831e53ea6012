#ifndef PAIRSTAT_RANDOMIZERS_HPP_
#define PAIRSTAT_RANDOMIZERS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "pairstat/rng.hpp"
#include "pairstat/workload.hpp"

namespace pairstat {

/// Privacy budget epsilon with a named allocation of sub-budgets that sum
/// back to epsilon (e.g. four quarters for the three-round protocol).
struct PrivacyBudget {
  double epsilon = 0.0;
  std::vector<std::pair<std::string, double>> allocation;

  static PrivacyBudget single(double eps, const std::string& tag);
  /// Splits eps into equal parts, one per tag. Parts are eps/m with m the
  /// number of tags; for the power-of-two splits used here the parts are
  /// exact and recompose to eps exactly.
  static PrivacyBudget equal_split(double eps,
                                   const std::vector<std::string>& tags);
  void validate() const;
};

struct RandomizerOutput {
  Vector vector;
  std::string mechanism_id;
  double sigma_bound = 0.0;  // declared per-direction sub-Gaussian scale
};

/// Per-direction sub-Gaussian scale of vrand is c_v * C / eps with this
/// constant, calibrated empirically at d = 32, eps = 1 and held fixed.
inline constexpr double kVrandSigmaConstant = 3.0;

/// m_d = E|u_1| for u uniform on S^{d-1}: Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2)).
double sphere_mean_abs_coordinate(int d);

/// Output radius B = C * (e^eps + 1)/(e^eps - 1) / m_d of the vector
/// randomizer; chosen so the mechanism is unbiased.
double vrand_scale(int d, double c_bound, double epsilon);

/// Analytic P[output = +B] of the one-dimensional mechanism on input x,
/// used by the exact likelihood-ratio privacy checks.
double vrand_plus_probability_1d(double x, double c_bound, double epsilon);

/// Bounded-l2 vector randomizer, exactly eps-DP and unbiased.
///
/// Two-stage sphere mechanism: (1) magnitude randomized response emits the
/// input direction v = x/||x|| with probability 1/2 + ||x||/(2C), else -v;
/// (2) a uniform sphere point u is reflected so that its hemisphere relative
/// to the stage-1 direction matches a Bernoulli(e^eps/(1+e^eps)) coin;
/// (3) the point is scaled by B = vrand_scale(d, C, eps).
///
/// Inputs with ||x|| > C are rejected, except for relative overshoot up to
/// 1e-9 which is renormalized (kernel columns can sit exactly on the bound).
RandomizerOutput vrand(const Vector& x, double c_bound, double epsilon,
                       Rng& rng, bool noise_off = false);

/// value + Lap(b) via inverse-CDF sampling.
double laplace(double value, double scale_b, Rng& rng, bool noise_off = false);

/// Flips the bit with probability 1/(1 + e^eps).
int randomized_response_bit(int bit, double epsilon, Rng& rng,
                            bool noise_off = false);

/// Unbiased estimate of the true one-count from a randomized-response count:
/// (count - n p) / (1 - 2p) with p = 1/(1 + e^eps).
double rr_debias(double count, long n, double epsilon);

/// Truncates x to [-tau, tau].
double clip(double x, double tau);

}  // namespace pairstat

#endif  // PAIRSTAT_RANDOMIZERS_HPP_
