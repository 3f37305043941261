#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/atypical.hpp"
#include "osp/halfint.hpp"
#include "osp/polydegree.hpp"
#include "osp/resolution.hpp"
#include "osp/weight.hpp"
#include "osp/weyl.hpp"

namespace osp {

/// A sequence whose tail is not exactly polynomial at the sampled depth.
class NotPolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolution terms branch on d mod 4, so growth is read per residue class.
inline constexpr int kResidueClasses = 4;

/// Subsequences seq[r], seq[r + modulus], ... for r = 0..modulus-1.
inline std::vector<std::vector<BigInt>> split_by_residue(std::span<const BigInt> seq, int modulus = kResidueClasses) {
  std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(modulus));
  for (std::size_t d = 0; d < seq.size(); ++d) out[d % static_cast<std::size_t>(modulus)].push_back(seq[d]);
  return out;
}

/// Exact degree of each residue class; throws NotPolynomialError on failure.
inline std::map<int, int> degrees_by_residue(std::span<const BigInt> seq, std::size_t burn_in = 2) {
  std::map<int, int> degrees;
  const auto classes = split_by_residue(seq);
  for (std::size_t r = 0; r < classes.size(); ++r) {
    if (classes[r].size() < burn_in + 3)
      throw NotPolynomialError("residue class " + std::to_string(r) + " has only " +
                               std::to_string(classes[r].size()) + " points; increase the depth");
    const auto deg = poly_degree_exact(classes[r], burn_in);
    if (!deg)
      throw NotPolynomialError("residue class " + std::to_string(r) +
                               " is not exactly polynomial at this depth; increase the depth");
    degrees[static_cast<int>(r)] = *deg;
  }
  return degrees;
}

/// Rate of growth of a quasi-polynomial sequence: 1 + the largest class degree
/// (0 for an identically zero sequence).
inline int rate_of_growth(const std::map<int, int>& degrees_by_class) {
  int max_degree = kZeroSequenceDegree;
  for (const auto& [r, deg] : degrees_by_class) max_degree = std::max(max_degree, deg);
  return max_degree + 1;
}

inline int rate_of_growth(std::span<const BigInt> seq, std::size_t burn_in = 2) {
  return rate_of_growth(degrees_by_residue(seq, burn_in));
}

struct GeometricDims {
  int associated_variety = 0;  // dim X_{L(lambda)}
  int support_variety = 0;     // dim v_(g,g0)(L(lambda))
  int detecting_support = 0;   // dim v_(f,f0)(L(lambda))
};

/// Dimension of the odd part of the detecting subalgebra f (root pair at delta - eps1).
inline constexpr int kDetectingOddDim = 2;

/// (k, 1, 2) for atypical lambda in P+, (0, 0, 0) for typical.
inline GeometricDims geometric_dims(const Weight& lambda) {
  if (!is_g_dominant(lambda)) throw std::invalid_argument("geometric_dims requires lambda in P+, got " + lambda.str());
  const int atyp = atypicality(lambda).degree;
  if (atyp == 0) return {};
  // X is the full cone of self-commuting odd elements: two components of dim (dim g_1)/2 = k
  const int dim_g1 = 2 * lambda.k();
  return GeometricDims{dim_g1 / 2, atyp, kDetectingOddDim};
}

struct GrowthReport {
  int k = 0;
  Weight weight = Weight::zero(3);
  int atypicality = 0;
  int depth = 0;
  ProxyMode mode = ProxyMode::Lower;
  std::map<int, int> degrees_by_residue;        // dimension proxy, per d mod 4
  std::map<int, int> count_degrees_by_residue;  // summand counts, per d mod 4
  int rate_of_growth = 0;
  int complexity = 0;
  int z_complexity = 0;
  GeometricDims geometry;
  bool complexity_identity_holds = true;  // c = dim X + dim v_(g,g0)
  bool z_identity_holds = true;           // z = dim v_(f,f0)
  std::vector<ResolutionTerm> terms;      // empty for typical weights

  bool identities_hold() const { return complexity_identity_holds && z_identity_holds; }
};

/// Complexity, z-complexity and geometric dimensions of L(lambda).
///
/// Typical weights give the all-zero report. For atypical weights the
/// resolution of the trivial module is analysed, since simple modules of
/// equal atypicality share both complexities.
inline GrowthReport full_report(const Weight& lambda, int depth, ProxyMode mode = ProxyMode::Lower) {
  if (!is_g_dominant(lambda)) throw std::invalid_argument("full_report requires lambda in P+, got " + lambda.str());
  const int k = lambda.k();
  if (depth < min_proxy_depth(k))
    throw std::invalid_argument("full_report: depth " + std::to_string(depth) + " below 4m+8 = " +
                                std::to_string(min_proxy_depth(k)));
  GrowthReport rep;
  rep.k = k;
  rep.weight = lambda;
  rep.depth = depth;
  rep.mode = mode;
  rep.atypicality = atyp_of_simple(lambda);
  rep.geometry = geometric_dims(lambda);
  if (rep.atypicality == 0) return rep;

  const TrivialResolution res(k);
  rep.terms = res.terms(depth);
  std::vector<BigInt> proxy, counts;
  for (const auto& t : rep.terms) {
    proxy.push_back(t.proxy(mode));
    counts.emplace_back(t.count);
  }
  rep.degrees_by_residue = degrees_by_residue(proxy);
  rep.count_degrees_by_residue = degrees_by_residue(counts);
  rep.rate_of_growth = rate_of_growth(rep.degrees_by_residue);
  rep.complexity = rep.rate_of_growth;
  rep.z_complexity = rate_of_growth(rep.count_degrees_by_residue);
  rep.complexity_identity_holds =
      rep.complexity == rep.geometry.associated_variety + rep.geometry.support_variety;
  rep.z_identity_holds = rep.z_complexity == rep.geometry.detecting_support;
  return rep;
}

}  // namespace osp
