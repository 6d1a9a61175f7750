#pragma once

// Small generators and independent reference computations shared by the tests.

#include "chc/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace chc::testing {

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_zero_based(images);
}

inline TorusPoint random_point(std::size_t n, std::mt19937_64& rng, double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  TorusPoint point{std::vector<double>(n)};
  for (auto& t : point.theta) t = u(rng);
  return point;
}

inline Weight random_weight(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> u(-13, 13);
  std::vector<HalfInt> coords(n);
  for (auto& c : coords) c = HalfInt::from_twice(u(rng));
  return Weight(coords);
}

// Sign from the inversion count, the textbook definition.
inline int inversion_sign(const std::vector<int>& images) {
  int inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) inversions += images[i] > images[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline double relative_gap(Complex x, Complex y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

}  // namespace chc::testing
