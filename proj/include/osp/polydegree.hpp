#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/halfint.hpp"

namespace osp {

/// Degree reported for an identically zero sequence.
inline constexpr int kZeroSequenceDegree = -1;

/// Degree of an exactly polynomial sequence by finite differences.
///
/// The first burn_in entries are dropped. The result is n - 1 for the
/// smallest order n whose n-th difference vanishes identically, where only
/// orders n <= size - 2 are tried so that at least two differences witness
/// the vanishing. An all-zero tail gives kZeroSequenceDegree. std::nullopt
/// means no tried order vanished (not polynomial, or too few points).
inline std::optional<int> poly_degree_exact(std::span<const BigInt> seq, std::size_t burn_in = 2) {
  if (seq.size() < burn_in + 3)
    throw std::invalid_argument("poly_degree_exact: need at least 3 points after burn-in, got " +
                                std::to_string(seq.size() > burn_in ? seq.size() - burn_in : 0));
  std::vector<BigInt> diff(seq.begin() + static_cast<std::ptrdiff_t>(burn_in), seq.end());
  const std::size_t max_order = diff.size() - 2;
  for (std::size_t order = 0; order <= max_order; ++order) {
    if (std::all_of(diff.begin(), diff.end(), [](const BigInt& v) { return v.is_zero(); }))
      return static_cast<int>(order) - 1;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return std::nullopt;
}

/// Least-squares slope of log(value) against log(t) over the positive
/// entries with t >= t_min. Diagnostic only; the exact detector is authoritative.
inline double loglog_slope(std::span<const BigInt> seq, std::size_t t_min = 1) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t t = std::max<std::size_t>(t_min, 1); t < seq.size(); ++t) {
    if (seq[t].sign() <= 0) continue;
    const double x = std::log(static_cast<double>(t));
    const double y = std::log(seq[t].convert_to<double>());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("loglog_slope: need at least two positive points");
  const double nn = static_cast<double>(n);
  return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

}  // namespace osp
