#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/halfint.hpp"
#include "osp/rootsys.hpp"
#include "osp/weight.hpp"
#include "osp/weyl.hpp"

namespace osp {

/// Atypical root delta + sign * eps_index.
struct AtypicalRoot {
  int index = 0;  // 1..m
  int sign = 0;   // +1 or -1

  Weight vec(int k) const {
    Weight g = Weight::delta(k);
    return sign > 0 ? g + Weight::epsilon(k, index) : g - Weight::epsilon(k, index);
  }
  std::string label() const { return std::string("delta") + (sign > 0 ? "+" : "-") + "eps" + std::to_string(index); }

  friend bool operator==(const AtypicalRoot&, const AtypicalRoot&) = default;
};

struct AtypicalityInfo {
  int degree = 0;
  std::optional<AtypicalRoot> root;
  /// The atypical type S: {|shifted_i| : i != 0, l}, in decreasing order.
  std::vector<HalfInt> sset;

  bool atypical() const { return degree == 1; }
  bool sset_contains(const HalfInt& v) const { return std::find(sset.begin(), sset.end(), v) != sset.end(); }
};

/// Atypicality of an integral g0-dominant weight.
///
/// The atypical root is the isotropic positive odd root orthogonal to
/// lambda + rho. When shifted_0 = shifted_l = 0 both delta +- eps_l qualify
/// and delta - eps_l is chosen.
inline AtypicalityInfo atypicality(const Weight& lambda) {
  if (!is_g0_dominant(lambda))
    throw std::invalid_argument("atypicality requires an integral g0-dominant weight, got " + lambda.str());
  const int k = lambda.k();
  const int m = lambda.m();
  const Weight shifted = rho_shift(lambda);

  std::vector<AtypicalRoot> orthogonal;
  for (int l = 1; l <= m; ++l)
    for (int sign : {+1, -1}) {
      const AtypicalRoot r{l, sign};
      if (form(shifted, r.vec(k)) == 0) orthogonal.push_back(r);
    }

  AtypicalityInfo info;
  if (orthogonal.empty()) return info;

  AtypicalRoot chosen = orthogonal.front();
  if (orthogonal.size() == 2 && orthogonal[0].index == orthogonal[1].index &&
      shifted[static_cast<std::size_t>(chosen.index)].is_zero() && shifted[0].is_zero()) {
    chosen.sign = -1;
  } else if (orthogonal.size() != 1) {
    throw std::logic_error("weight " + lambda.str() + " is orthogonal to several isotropic odd roots");
  }

  for (std::size_t i = 1; i < lambda.coords().size(); ++i)
    if (!lambda[i].is_integer())
      throw std::logic_error("atypical weight " + lambda.str() + " has a non-integral epsilon coordinate");

  info.degree = 1;
  info.root = chosen;
  for (int i = 1; i <= m; ++i)
    if (i != chosen.index) info.sset.push_back(shifted[static_cast<std::size_t>(i)].abs());
  std::sort(info.sset.begin(), info.sset.end(), std::greater<>());
  return info;
}

/// atyp(L(lambda)) for lambda in P+.
inline int atyp_of_simple(const Weight& lambda) {
  if (!is_g_dominant(lambda))
    throw std::invalid_argument("atyp_of_simple requires an integral g-dominant weight, got " + lambda.str());
  return atypicality(lambda).degree;
}

}  // namespace osp
