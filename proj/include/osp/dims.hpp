#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/atypical.hpp"
#include "osp/halfint.hpp"
#include "osp/polydegree.hpp"
#include "osp/weight.hpp"
#include "osp/weyl.hpp"

namespace osp {

/// Highest weight of a simple module over sl2 + so(k).
struct G0Weight {
  HalfInt sl2part;
  std::vector<HalfInt> sokpart;

  static G0Weight of(const Weight& lambda) {
    return G0Weight{lambda[0], std::vector<HalfInt>(lambda.eps().begin(), lambda.eps().end())};
  }
};

/// Sandwich dim L0(mu) <= dim P(mu) <= 2^(2k) dim L0(mu).
struct DimBound {
  BigInt lower;
  BigInt upper;
  /// Typical weights have P(mu) = L(mu); the interval is still reported.
  bool typical = false;
};

/// so(k)-dominance: l1 >= ... >= l_{m-1} >= |l_m| (k even) or ... >= l_m >= 0 (k odd),
/// with all coordinates in Z or all in 1/2+Z.
inline bool is_so_dominant(int k, std::span<const HalfInt> mu) {
  const std::size_t m = mu.size();
  if (m != static_cast<std::size_t>(rank_of(k)) || m == 0) return false;
  const bool integer = mu[0].is_integer();
  for (const auto& c : mu)
    if (c.is_integer() != integer) return false;
  for (std::size_t i = 0; i + 2 < m; ++i)
    if (mu[i] < mu[i + 1]) return false;
  if (m >= 2 && mu[m - 2] < mu[m - 1].abs()) return false;
  if (k % 2 != 0 && mu[m - 1].sign() < 0) return false;
  return true;
}

/// Half-sum of positive roots of so(k): (m-1, ..., 1, 0) or (m-1/2, ..., 1/2).
inline std::vector<HalfInt> rho_so(int k) {
  const int m = rank_of(k);
  std::vector<HalfInt> rho;
  for (int i = 1; i <= m; ++i) rho.push_back(k % 2 == 0 ? HalfInt(m - i) : HalfInt(m - i) + HalfInt::half());
  return rho;
}

/// Weyl dimension formula for so(k): prod over positive roots of (mu+rho, a) / (rho, a).
inline BigInt weyl_dim_so(int k, std::span<const HalfInt> mu) {
  require_valid_k(k);
  if (!is_so_dominant(k, mu)) throw std::invalid_argument("weyl_dim_so: weight is not so(k)-dominant");
  const std::size_t m = mu.size();
  const std::vector<HalfInt> rho = rho_so(k);
  std::vector<HalfInt> shifted(m);
  for (std::size_t i = 0; i < m; ++i) shifted[i] = mu[i] + rho[i];

  Rational num = 1;
  Rational den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      num *= (shifted[i] - shifted[j]).to_rational() * (shifted[i] + shifted[j]).to_rational();
      den *= (rho[i] - rho[j]).to_rational() * (rho[i] + rho[j]).to_rational();
    }
    if (k % 2 != 0) {
      num *= shifted[i].to_rational();
      den *= rho[i].to_rational();
    }
  }
  const Rational dim = num / den;
  if (boost::multiprecision::denominator(dim) != 1)
    throw std::logic_error("Weyl dimension product is not an integer: " + dim.str());
  return boost::multiprecision::numerator(dim);
}

/// dim of the simple sl2 + so(k) module: (l0 + 1) * dim_so(l1..lm).
inline BigInt dim_simple_g0(const G0Weight& w, int k) {
  if (!w.sl2part.is_integer() || w.sl2part.sign() < 0)
    throw std::invalid_argument("dim_simple_g0: sl2 part " + w.sl2part.str() + " is not a non-negative integer");
  return (w.sl2part.to_integer() + 1) * weyl_dim_so(k, w.sokpart);
}

/// Bounds on dim P(lambda) for lambda in P+, with dim g_1 = 2k.
inline DimBound projective_dim_bounds(const Weight& lambda) {
  if (!is_g_dominant(lambda)) throw std::invalid_argument("projective_dim_bounds requires lambda in P+, got " + lambda.str());
  DimBound b;
  b.lower = dim_simple_g0(G0Weight::of(lambda), lambda.k());
  b.upper = b.lower << (2 * lambda.k());
  b.typical = atypicality(lambda).degree == 0;
  return b;
}

/// Degree in r of dim L(r, 0, ..., 0) over so(k), by exact finite differences.
inline int degree_in_r_of_dim(int k, int samples = 0) {
  require_valid_k(k);
  const int m = rank_of(k);
  const int count = std::max({samples, 21, 2 * m + 4});
  std::vector<BigInt> dims;
  for (int r = 0; r < count; ++r) {
    std::vector<HalfInt> mu(static_cast<std::size_t>(m), HalfInt{});
    mu[0] = r;
    dims.push_back(weyl_dim_so(k, mu));
  }
  const auto degree = poly_degree_exact(dims, 0);
  if (!degree) throw std::logic_error("dim L(r,0,...,0) is not polynomial in r for k=" + std::to_string(k));
  return *degree;
}

}  // namespace osp
