#pragma once

// Hand-rolled generators for property tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "casimir_liv/sme_tensors.hpp"

namespace casimir_liv::testing {

inline std::array<int, 4> canonical_orbit_member(const std::array<int, 4>& i) {
  const auto [k, l, m, n] = i;
  const std::array<std::array<int, 4>, 8> images{{{k, l, m, n},
                                                  {l, k, m, n},
                                                  {k, l, n, m},
                                                  {l, k, n, m},
                                                  {m, n, k, l},
                                                  {n, m, k, l},
                                                  {m, n, l, k},
                                                  {n, m, l, k}}};
  return *std::min_element(images.begin(), images.end());
}

/// Up to `max_orbits` distinct symmetry orbits with random magnitudes spread
/// over 1e-18 .. 1e-3 and random signs.
inline std::vector<sme::KFEntry> random_kf_entries(std::mt19937_64& rng, int max_orbits = 6) {
  std::uniform_int_distribution<int> index(0, 3);
  std::uniform_int_distribution<int> count(1, max_orbits);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_real_distribution<double> exponent(-18.0, -3.0);

  std::set<std::array<int, 4>> seen;
  std::vector<sme::KFEntry> entries;
  const int wanted = count(rng);
  while (static_cast<int>(entries.size()) < wanted) {
    std::array<int, 4> i{index(rng), index(rng), index(rng), index(rng)};
    if (i[0] == i[1] || i[2] == i[3]) continue;
    if (!seen.insert(canonical_orbit_member(i)).second) continue;
    entries.push_back({i, mantissa(rng) * std::pow(10.0, exponent(rng))});
  }
  return entries;
}

inline sme::KFTensor random_kf(std::mt19937_64& rng, int max_orbits = 6) {
  const auto entries = random_kf_entries(rng, max_orbits);
  return sme::KFTensor::from_representatives(entries);
}

}  // namespace casimir_liv::testing
