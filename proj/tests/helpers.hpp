#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sbproj/core.hpp"
#include "sbproj/rng.hpp"

namespace sbproj::test {

// |a - b| <= tol * max(|a|, |b|, floor). The floor keeps relative checks
// meaningful on anchors whose exact value is zero.
inline bool rel_close(double a, double b, double tol, double floor = 0.0) {
  const double scale = std::max({std::fabs(a), std::fabs(b), floor});
  return std::fabs(a - b) <= tol * scale;
}

inline Vector random_vector(std::size_t d, CounterRng& rng, double lo = -1.0, double hi = 1.0) {
  Vector x(d);
  for (auto& v : x) v = lo + (hi - lo) * rng.next_unit();
  return x;
}

inline double sq_norm_of(const std::vector<double>& v) {
  double acc = 0.0;
  for (double e : v) acc += e * e;
  return acc;
}

// Lexicographic c-subset enumeration for test-local brute forcing.
inline bool next_combination(std::vector<std::size_t>& subset, std::size_t d) {
  const std::size_t c = subset.size();
  std::size_t slot = c;
  while (slot > 0 && subset[slot - 1] == d - c + slot - 1) --slot;
  if (slot == 0) return false;
  ++subset[slot - 1];
  for (std::size_t k = slot; k < c; ++k) subset[k] = subset[k - 1] + 1;
  return true;
}

inline std::vector<std::size_t> first_combination(std::size_t c) {
  std::vector<std::size_t> subset(c);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  return subset;
}

}  // namespace sbproj::test
