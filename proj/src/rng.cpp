#include "pairstat/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pairstat {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t tag_hash(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  // Rejection on the top slice keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t u;
  do {
    u = next_u64();
  } while (u >= limit);
  return lo + static_cast<int>(u % span);
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = uniform_open01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(t);
  has_cached_ = true;
  return r * std::cos(t);
}

double Rng::laplace(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("laplace scale must be positive");
  const double u = uniform01() - 0.5;  // [-0.5, 0.5)
  const double sign = (u < 0.0) ? -1.0 : 1.0;
  return -b * sign * std::log1p(-2.0 * std::abs(u));
}

Vector Rng::normal_vector(int d) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = normal();
  return v;
}

Vector Rng::unit_sphere(int d) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  for (;;) {
    Vector v = normal_vector(d);
    const double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
}

}  // namespace pairstat
