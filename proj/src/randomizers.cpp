#include "pairstat/randomizers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pairstat {

PrivacyBudget PrivacyBudget::single(double eps, const std::string& tag) {
  PrivacyBudget b;
  b.epsilon = eps;
  b.allocation.emplace_back(tag, eps);
  b.validate();
  return b;
}

PrivacyBudget PrivacyBudget::equal_split(double eps,
                                         const std::vector<std::string>& tags) {
  if (tags.empty()) throw std::invalid_argument("budget split needs tags");
  PrivacyBudget b;
  b.epsilon = eps;
  const double part = eps / static_cast<double>(tags.size());
  for (const auto& t : tags) b.allocation.emplace_back(t, part);
  b.validate();
  return b;
}

void PrivacyBudget::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  double sum = 0.0;
  for (const auto& [tag, part] : allocation) {
    if (!(part > 0.0))
      throw std::invalid_argument("sub-budget \"" + tag + "\" must be positive");
    sum += part;
  }
  if (std::abs(sum - epsilon) > 1e-12)
    throw std::invalid_argument("sub-budgets must sum to epsilon");
}

double sphere_mean_abs_coordinate(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const double half = 0.5 * static_cast<double>(d);
  return std::exp(std::lgamma(half) - std::lgamma(half + 0.5)) /
         std::sqrt(std::acos(-1.0));
}

double vrand_scale(int d, double c_bound, double epsilon) {
  const double e = std::exp(epsilon);
  return c_bound * (e + 1.0) / (e - 1.0) / sphere_mean_abs_coordinate(d);
}

double vrand_plus_probability_1d(double x, double c_bound, double epsilon) {
  const double e = std::exp(epsilon);
  return 0.5 + x * (e - 1.0) / (2.0 * c_bound * (e + 1.0));
}

RandomizerOutput vrand(const Vector& x, double c_bound, double epsilon,
                       Rng& rng, bool noise_off) {
  const int d = static_cast<int>(x.size());
  if (d < 1) throw std::invalid_argument("vrand: empty input");
  if (!(epsilon > 0.0)) throw std::invalid_argument("vrand: epsilon <= 0");
  if (!(c_bound > 0.0)) throw std::invalid_argument("vrand: bound <= 0");

  Vector input = x;
  double norm = input.norm();
  if (norm > c_bound) {
    if (norm > c_bound * (1.0 + 1e-9)) {
      throw std::invalid_argument("vrand: ||x|| exceeds the declared bound");
    }
    input *= c_bound / norm;  // floating overshoot only
    norm = c_bound;
  }

  const double sigma = kVrandSigmaConstant * c_bound / epsilon;
  if (noise_off) return RandomizerOutput{input, "vrand", sigma};

  // Stage 1: randomize the magnitude onto a signed direction.
  Vector v;
  if (norm > 0.0) {
    v = input / norm;
  } else {
    v = Vector::Zero(d);
    v(0) = 1.0;  // arbitrary; stage 2 symmetrizes the x = 0 case
  }
  const double p_mag = 0.5 + norm / (2.0 * c_bound);
  if (!rng.bernoulli(p_mag)) v = -v;

  // Stage 2: hemisphere randomized response around v.
  const double q = std::exp(epsilon) / (1.0 + std::exp(epsilon));
  Vector u = rng.unit_sphere(d);
  const bool coin_plus = rng.bernoulli(q);
  double dot = u.dot(v);
  if (dot == 0.0) dot = 1.0;  // measure-zero tie
  const bool agree = (dot > 0.0) == coin_plus;
  if (!agree) u = -u;

  return RandomizerOutput{vrand_scale(d, c_bound, epsilon) * u, "vrand", sigma};
}

double laplace(double value, double scale_b, Rng& rng, bool noise_off) {
  if (!(scale_b > 0.0)) throw std::invalid_argument("laplace: scale <= 0");
  if (noise_off) {
    // Keep the stream position independent of the noise switch.
    return value;
  }
  return value + rng.laplace(scale_b);
}

int randomized_response_bit(int bit, double epsilon, Rng& rng, bool noise_off) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("rr: bit must be 0/1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("rr: epsilon <= 0");
  if (noise_off) return bit;
  const double p_flip = 1.0 / (1.0 + std::exp(epsilon));
  return rng.bernoulli(p_flip) ? 1 - bit : bit;
}

double rr_debias(double count, long n, double epsilon) {
  const double p = 1.0 / (1.0 + std::exp(epsilon));
  return (count - static_cast<double>(n) * p) / (1.0 - 2.0 * p);
}

double clip(double x, double tau) {
  if (tau < 0.0) throw std::invalid_argument("clip: tau must be >= 0");
  return std::min(std::max(x, -tau), tau);
}

}  // namespace pairstat
