#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/atypical.hpp"
#include "osp/halfint.hpp"
#include "osp/rootsys.hpp"
#include "osp/weight.hpp"
#include "osp/weyl.hpp"

namespace osp {

/// Raised by operations that need an atypical weight.
class TypicalWeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline AtypicalityInfo require_atypical(const Weight& lambda, const char* op) {
  AtypicalityInfo info = atypicality(lambda);
  if (!info.atypical()) throw TypicalWeightError(std::string(op) + " requires an atypical weight, got " + lambda.str());
  return info;
}

}  // namespace detail

struct APlusMinus {
  long plus = 0;
  long minus = 0;
};

/// Smallest positive a_+ and a_- with
///   |shifted_l + a_+|, |shifted_l - a_-| not in S   when gamma = delta + eps_l,
///   |shifted_l - a_+|, |shifted_l + a_-| not in S   when gamma = delta - eps_l.
inline APlusMinus a_plus_minus(const Weight& lambda) {
  const AtypicalityInfo info = detail::require_atypical(lambda, "a_plus_minus");
  const HalfInt atyp_coord = rho_shift(lambda)[static_cast<std::size_t>(info.root->index)];
  const int dir = info.root->sign;
  auto smallest = [&](int direction) {
    // S is finite, so at most |S| + 1 candidates are rejected before one succeeds
    for (long a = 1;; ++a)
      if (!info.sset_contains((atyp_coord + HalfInt(direction * a)).abs())) return a;
  };
  return APlusMinus{smallest(dir), smallest(-dir)};
}

/// (lambda + a_+ gamma)^+
inline Weight hat(const Weight& lambda) {
  const AtypicalityInfo info = detail::require_atypical(lambda, "hat");
  const long a = a_plus_minus(lambda).plus;
  return dominant_conjugate(lambda + a * info.root->vec(lambda.k())).weight;
}

/// (lambda - a_- gamma)^+
inline Weight check(const Weight& lambda) {
  const AtypicalityInfo info = detail::require_atypical(lambda, "check");
  const long a = a_plus_minus(lambda).minus;
  return dominant_conjugate(lambda - a * info.root->vec(lambda.k())).weight;
}

/// The base weight lambda^(0) of lambda's block.
///
/// With j the smallest non-negative integer such that a = j + 1 - s is not
/// in S, the shifted base weight is (-a | b_1, ..., b_{m-1-j}, a, b_{m-j}, ..., b_{m-1})
/// where b_1 > ... > b_{m-1} lists S. Because every value below a that
/// could occur in S does occur, the result is strictly decreasing.
inline Weight lambda_zero(const Weight& lambda) {
  const AtypicalityInfo info = detail::require_atypical(lambda, "lambda_zero");
  const int k = lambda.k();
  const int m = lambda.m();
  const HalfInt s = s_of(k);

  long j = 0;
  while (info.sset_contains(HalfInt(j + 1) - s)) ++j;
  const HalfInt a = HalfInt(j + 1) - s;
  if (j > m - 1) throw std::logic_error("lambda_zero: insertion index out of range for " + lambda.str());

  const auto& b = info.sset;  // descending, m-1 entries
  const auto insert_at = static_cast<std::size_t>(m - 1 - j);
  std::vector<HalfInt> tail(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(insert_at));
  tail.push_back(a);
  tail.insert(tail.end(), b.begin() + static_cast<std::ptrdiff_t>(insert_at), b.end());

  for (std::size_t i = 0; i + 1 < tail.size(); ++i)
    if (!(tail[i] > tail[i + 1]))
      throw NotRegularError("lambda_zero: inserted value " + a.str() + " does not fit strictly into S for " +
                            lambda.str());

  std::vector<HalfInt> coords;
  coords.push_back(-a);
  coords.insert(coords.end(), tail.begin(), tail.end());
  Weight base = rho_unshift(Weight(k, std::move(coords)));

  if (!is_g0_dominant(base)) throw std::logic_error("lambda_zero produced non-dominant " + base.str());
  const AtypicalityInfo base_info = atypicality(base);
  if (!base_info.atypical() || base_info.sset != info.sset)
    throw std::logic_error("lambda_zero changed the atypical type of " + lambda.str());
  return base;
}

enum class Quiver { DInfinity, AInfinityInfinity };

inline const char* to_string(Quiver q) { return q == Quiver::DInfinity ? "D_infinity" : "A_infinity^infinity"; }

/// Raised when a D_infinity-only construction is requested for an A_infinity^infinity block.
class UndefinedForBlockError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The two-sided sequence i -> lambda^(i) of a D_infinity block, extended on demand.
///
/// lambda^(i) = hat(lambda^(i-1)) and lambda^(-i) = check(lambda^(1-i)) for
/// i >= 1. Extension is serialized by an internal mutex, so one orbit may be
/// shared between threads.
class DInfinityOrbit {
 public:
  explicit DInfinityOrbit(const Weight& base) : k_(base.k()) { cache_.emplace(0, base); }

  int k() const { return k_; }
  Weight base() const { return at(0); }

  Weight at(long i) const {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(i); it != cache_.end()) return it->second;
    if (i > 0) {
      long top = cache_.rbegin()->first;
      while (top < i) {
        Weight next = hat(cache_.at(top));
        cache_.emplace(++top, std::move(next));
      }
    } else {
      long bottom = cache_.begin()->first;
      while (bottom > i) {
        Weight next = check(cache_.at(bottom));
        cache_.emplace(--bottom, std::move(next));
      }
    }
    return cache_.at(i);
  }

  /// Number of memoized entries.
  std::size_t cached() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

 private:
  int k_;
  mutable std::mutex mutex_;
  mutable std::map<long, Weight> cache_;
};

struct BlockDescriptor {
  Quiver quiver;
  Weight base;                                   // lambda^(0)
  std::shared_ptr<const DInfinityOrbit> orbit;  // null for A_infinity^infinity
};

/// D_infinity when k is odd or 0 is in S; A_infinity^infinity otherwise.
inline BlockDescriptor classify_block(const Weight& lambda) {
  const AtypicalityInfo info = detail::require_atypical(lambda, "classify_block");
  const bool d_infinity = !lambda.type_d() || info.sset_contains(HalfInt(0));
  Weight base = lambda_zero(lambda);
  if (!d_infinity) return BlockDescriptor{Quiver::AInfinityInfinity, std::move(base), nullptr};
  auto orbit = std::make_shared<const DInfinityOrbit>(base);
  return BlockDescriptor{Quiver::DInfinity, std::move(base), std::move(orbit)};
}

/// lambda^(i) for a weight in a D_infinity block; lambda_i(lambda, 0) = lambda_zero(lambda).
inline Weight lambda_i(const Weight& lambda, long i) {
  const BlockDescriptor block = classify_block(lambda);
  if (block.quiver != Quiver::DInfinity)
    throw UndefinedForBlockError("lambda_i undefined for A_infinity^infinity blocks (weight " + lambda.str() + ")");
  return block.orbit->at(i);
}

}  // namespace osp
