#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "osp/osp.hpp"

namespace osp::testing {

// Random weights for property tests. Seeds are fixed by callers.

inline Weight random_integral_weight(std::mt19937& rng, int k, int span = 6) {
  std::uniform_int_distribution<int> coord(-span, span);
  std::vector<HalfInt> c;
  for (int i = 0; i <= rank_of(k); ++i) c.emplace_back(coord(rng));
  return Weight(k, std::move(c));
}

/// Integral regular weight with all epsilon coordinates in one coset.
/// For k odd, half of the draws use the 1/2+Z coset with no zero shifted entry.
inline Weight random_regular_weight(std::mt19937& rng, int k, int span = 6) {
  std::bernoulli_distribution half_coset(0.5);
  for (;;) {
    Weight w = random_integral_weight(rng, k, span);
    if (k % 2 != 0 && half_coset(rng))
      for (int i = 1; i <= w.m(); ++i) w[static_cast<std::size_t>(i)] += HalfInt::half();
    if (!is_regular(w)) continue;
    const Weight shifted = rho_shift(w);
    bool zero = false;
    for (const auto& c : shifted.eps()) zero = zero || c.is_zero();
    if (k % 2 != 0 && zero) continue;  // spin coset orbits through 0 have no dominant member
    return w;
  }
}

/// Integral g0-dominant weight with integer epsilon coordinates.
inline Weight random_g0_dominant(std::mt19937& rng, int k, int span = 6) {
  std::uniform_int_distribution<int> coord(0, span);
  std::uniform_int_distribution<int> delta(-span, span);
  std::bernoulli_distribution flip(0.5);
  std::vector<int> e(static_cast<std::size_t>(rank_of(k)));
  for (auto& x : e) x = coord(rng);
  std::sort(e.rbegin(), e.rend());
  if (k % 2 == 0 && flip(rng)) e.back() = -e.back();
  std::vector<HalfInt> c{HalfInt(delta(rng))};
  for (int x : e) c.emplace_back(x);
  return Weight(k, std::move(c));
}

/// Atypical integral g0-dominant weight: lambda_0 is solved from shifted_0 = +-shifted_l.
inline Weight random_atypical_dominant(std::mt19937& rng, int k, int span = 6) {
  std::uniform_int_distribution<int> pick(1, rank_of(k));
  std::bernoulli_distribution sign(0.5);
  Weight w = random_g0_dominant(rng, k, span);
  const Weight rho = rho_of(k);
  const auto l = static_cast<std::size_t>(pick(rng));
  const HalfInt target = sign(rng) ? w[l] + rho[l] : -(w[l] + rho[l]);
  w[0] = target - rho[0];
  return w;
}

}  // namespace osp::testing
