#ifndef ROBBO_TESTS_SUPPORT_HPP
#define ROBBO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "robbo/transform.hpp"

namespace test {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

/// Rotated points with v increasing and |dq| < dv between neighbours.
inline std::vector<robbo::RotatedPoint> random_rotated(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> width(0.05, 3.0);
  std::uniform_real_distribution<double> slope(-0.95, 0.95);
  std::vector<robbo::RotatedPoint> out{{0.0, 0.0}};
  for (std::size_t i = 1; i < n; ++i) {
    const double w = width(rng);
    out.push_back({out.back().v + w, out.back().q + slope(rng) * w});
  }
  return out;
}

inline robbo::ToleranceVec random_delta(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.2, 3.0);
  return {d(rng), d(rng)};
}

/// Independent bound evaluation over every sample.
inline std::pair<double, double> brute_bounds(const robbo::Dataset& d, double v) {
  double lo = -INFINITY;
  double hi = INFINITY;
  for (const auto& s : d.samples()) {
    hi = std::min(hi, s.r.q + std::abs(v - s.r.v));
    lo = std::max(lo, s.r.q - std::abs(v - s.r.v));
  }
  return {lo, hi};
}

}  // namespace test

#endif  // ROBBO_TESTS_SUPPORT_HPP
