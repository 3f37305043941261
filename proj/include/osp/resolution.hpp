#pragma once

#include <array>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/dims.hpp"
#include "osp/halfint.hpp"
#include "osp/szops.hpp"
#include "osp/weight.hpp"

namespace osp {

/// Radical layers of an indecomposable projective P(lambda^(i)): head, middle, socle.
///
/// Indices are orbit positions. For A_infinity^infinity blocks a signed index
/// encodes the branch: +i is lambda_+^(i), -i is lambda_-^(i), 0 is the
/// shared base weight.
struct ProjCoverStructure {
  int head = 0;
  std::array<std::vector<int>, 3> layers;

  const std::vector<int>& middle() const& { return layers[1]; }
  std::vector<int> middle() && { return std::move(layers[1]); }
};

inline ProjCoverStructure proj_cover_structure(Quiver quiver, int i) {
  ProjCoverStructure p;
  p.head = i;
  std::vector<int> middle;
  if (quiver == Quiver::DInfinity) {
    if (i < 0) throw std::invalid_argument("proj_cover_structure: D_infinity index must be non-negative");
    switch (i) {
      case 0:
      case 1: middle = {2}; break;
      case 2: middle = {0, 1, 3}; break;
      default: middle = {i - 1, i + 1}; break;
    }
  } else {
    if (i == 0) {
      middle = {+1, -1};
    } else {
      const int sign = i > 0 ? 1 : -1;
      const int n = i > 0 ? i : -i;
      middle = {sign * (n - 1), sign * (n + 1)};
    }
  }
  p.layers = {std::vector<int>{i}, std::move(middle), std::vector<int>{i}};
  return p;
}

/// Summand indices of P_d in the minimal projective resolution of the trivial
/// module: d = 0 gives {0}; odd d gives {d+1, d-1, ..., 2}; even d > 0 gives
/// {d+1, d-1, ..., 3} followed by 0 (d = 0 mod 4) or 1 (d = 2 mod 4).
inline std::vector<int> resolution_summands(int d) {
  if (d < 0) throw std::invalid_argument("resolution step must be non-negative");
  if (d == 0) return {0};
  std::vector<int> out;
  const int last = d % 2 != 0 ? 2 : 3;
  for (int i = d + 1; i >= last; i -= 2) out.push_back(i);
  if (d % 2 == 0) out.push_back(d % 4 == 0 ? 0 : 1);
  return out;
}

enum class ProxyMode { Lower, Upper };

inline const char* to_string(ProxyMode m) { return m == ProxyMode::Lower ? "lower" : "upper"; }

struct ResolutionTerm {
  int d = 0;
  std::vector<int> summands;
  std::size_t count = 0;
  BigInt proxy_lower;
  BigInt proxy_upper;

  const BigInt& proxy(ProxyMode mode) const { return mode == ProxyMode::Lower ? proxy_lower : proxy_upper; }
};

/// The resolution of the trivial osp(k|2)-module, term by term.
///
/// The trivial weight always sits in a D_infinity block (0 is in its atypical
/// type), so its orbit lambda^(i) drives every summand. Orbit weights and
/// their dimension bounds are memoized; a TrivialResolution is meant for one
/// thread at a time.
class TrivialResolution {
 public:
  explicit TrivialResolution(int k) : k_(k) {
    require_valid_k(k);
    const BlockDescriptor block = classify_block(Weight::zero(k));
    if (block.quiver != Quiver::DInfinity) throw std::logic_error("trivial weight is not in a D_infinity block");
    orbit_ = block.orbit;
  }

  int k() const { return k_; }
  const DInfinityOrbit& orbit() const { return *orbit_; }

  const DimBound& bounds(int i) const {
    while (static_cast<int>(bounds_.size()) <= i)
      bounds_.push_back(projective_dim_bounds(orbit_->at(static_cast<long>(bounds_.size()))));
    return bounds_[static_cast<std::size_t>(i)];
  }

  ResolutionTerm term(int d) const {
    ResolutionTerm t;
    t.d = d;
    t.summands = resolution_summands(d);
    t.count = t.summands.size();
    for (int i : t.summands) t.proxy_lower += bounds(i).lower;
    t.proxy_upper = t.proxy_lower << (2 * k_);
    return t;
  }

  std::vector<ResolutionTerm> terms(int max_d) const {
    std::vector<ResolutionTerm> out;
    for (int d = 0; d <= max_d; ++d) out.push_back(term(d));
    return out;
  }

 private:
  int k_;
  std::shared_ptr<const DInfinityOrbit> orbit_;
  mutable std::vector<DimBound> bounds_;
};

inline ResolutionTerm resolution_term(int k, int d) { return TrivialResolution(k).term(d); }

/// count(d) = |summands of P_d| for d = 0..max_d.
inline std::vector<BigInt> summand_count_sequence(int k, int max_d) {
  require_valid_k(k);
  if (max_d < 0) throw std::invalid_argument("summand_count_sequence: negative length");
  std::vector<BigInt> out;
  for (int d = 0; d <= max_d; ++d) out.emplace_back(resolution_summands(d).size());
  return out;
}

/// Minimum depth accepted by dim_proxy_sequence: 4m + 8.
inline int min_proxy_depth(int k) { return 4 * rank_of(k) + 8; }

inline std::vector<BigInt> dim_proxy_sequence(const TrivialResolution& res, int max_d, ProxyMode mode) {
  if (max_d < min_proxy_depth(res.k()))
    throw std::invalid_argument("dim_proxy_sequence: depth " + std::to_string(max_d) + " below 4m+8 = " +
                                std::to_string(min_proxy_depth(res.k())));
  std::vector<BigInt> out;
  for (int d = 0; d <= max_d; ++d) out.push_back(res.term(d).proxy(mode));
  return out;
}

inline std::vector<BigInt> dim_proxy_sequence(int k, int max_d, ProxyMode mode) {
  return dim_proxy_sequence(TrivialResolution(k), max_d, mode);
}

/// CSV with columns d,count,proxy_lower,proxy_upper.
inline void write_resolution_csv(std::ostream& os, const std::vector<ResolutionTerm>& terms) {
  os << "d,count,proxy_lower,proxy_upper\n";
  for (const auto& t : terms) os << t.d << ',' << t.count << ',' << t.proxy_lower << ',' << t.proxy_upper << '\n';
}

}  // namespace osp
