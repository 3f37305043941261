#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "osp/halfint.hpp"
#include "osp/rootsys.hpp"
#include "osp/weight.hpp"

namespace osp {

/// Element of W0: a permutation of the m epsilon coordinates combined with
/// sign changes. For k = 2m the number of sign changes must be even.
///
/// Coordinate j (0-based) of the input is sent to position perm[j] and then
/// multiplied by signs[perm[j]], so result[i] = signs[i] * input[perm^-1(i)].
class SignedPermutation {
 public:
  SignedPermutation(int k, std::vector<int> perm, std::vector<int> signs)
      : k_(k), perm_(std::move(perm)), signs_(std::move(signs)) {
    require_valid_k(k_);
    const auto m = static_cast<std::size_t>(rank_of(k_));
    if (perm_.size() != m || signs_.size() != m) throw std::invalid_argument("signed permutation has wrong length");
    std::vector<int> seen(m, 0);
    for (int p : perm_) {
      if (p < 0 || static_cast<std::size_t>(p) >= m || seen[static_cast<std::size_t>(p)]++)
        throw std::invalid_argument("not a permutation");
    }
    int flips = 0;
    for (int s : signs_) {
      if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
      flips += s < 0;
    }
    if (k_ % 2 == 0 && flips % 2 != 0)
      throw std::invalid_argument("odd number of sign changes is not in W0 for k=" + std::to_string(k_));
  }

  static SignedPermutation identity(int k) {
    const auto m = static_cast<std::size_t>(rank_of(k));
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPermutation(k, std::move(perm), std::vector<int>(m, 1));
  }

  /// Pure sign change at the given 1-based positions.
  static SignedPermutation sign_flip(int k, const std::vector<int>& positions) {
    SignedPermutation w = identity(k);
    for (int p : positions) w.signs_.at(static_cast<std::size_t>(p - 1)) *= -1;
    return SignedPermutation(k, w.perm_, w.signs_);
  }

  int k() const { return k_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  int flip_count() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }
  bool is_identity() const { return *this == identity(k_); }

  /// Group law: (a * b)(x) = a(b(x)).
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("Weyl elements of different algebras");
    std::vector<int> perm(a.perm_.size());
    std::vector<int> signs(a.perm_.size());
    for (std::size_t q = 0; q < perm.size(); ++q) {
      const auto mid = static_cast<std::size_t>(b.perm_[q]);
      const int dst = a.perm_[mid];
      perm[q] = dst;
      signs[static_cast<std::size_t>(dst)] = a.signs_[static_cast<std::size_t>(dst)] * b.signs_[mid];
    }
    return SignedPermutation(a.k_, std::move(perm), std::move(signs));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  int k_;
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// Linear action on the epsilon coordinates; the delta coordinate is fixed.
inline Weight apply(const SignedPermutation& w, const Weight& lambda) {
  if (w.k() != lambda.k()) throw std::invalid_argument("Weyl element and weight belong to different algebras");
  Weight out = lambda;
  for (std::size_t j = 0; j < w.perm().size(); ++j) {
    const auto dst = static_cast<std::size_t>(w.perm()[j]);
    out[dst + 1] = w.signs()[dst] * lambda[j + 1];
  }
  return out;
}

/// w . lambda = w(lambda + rho) - rho
inline Weight dot(const SignedPermutation& w, const Weight& lambda) {
  return rho_unshift(apply(w, rho_shift(lambda)));
}

/// Element of W = W0 x Z2, where the Z2 factor negates the delta coordinate.
struct FullWeylElement {
  SignedPermutation w0;
  bool flip_delta = false;
};

inline Weight apply(const FullWeylElement& w, const Weight& lambda) {
  Weight out = apply(w.w0, lambda);
  if (w.flip_delta) out[0] = -out[0];
  return out;
}

// ---------------------------------------------------------------------------
// Integrality, regularity and dominance.

/// lambda_0 in Z and each lambda_i in Z or in s+Z, checked coordinate by coordinate.
inline bool is_integral(const Weight& lambda) {
  if (!lambda[0].is_integer()) return false;
  if (lambda.type_d())
    return std::all_of(lambda.eps().begin(), lambda.eps().end(), [](const HalfInt& c) { return c.is_integer(); });
  return true;  // s = 1/2: Z and 1/2+Z cover every half-integer
}

/// Like is_integral, but the epsilon coordinates must all lie in Z or all in s+Z.
inline bool is_integral_uniform(const Weight& lambda) {
  if (!is_integral(lambda)) return false;
  const auto e = lambda.eps();
  return std::all_of(e.begin(), e.end(), [&](const HalfInt& c) { return c.is_integer() == e.front().is_integer(); });
}

/// Integral with |shifted_1|, ..., |shifted_m| pairwise distinct.
inline bool is_regular(const Weight& lambda) {
  if (!is_integral(lambda)) return false;
  const Weight shifted = rho_shift(lambda);
  std::vector<HalfInt> abs_vals;
  for (const auto& c : shifted.eps()) abs_vals.push_back(c.abs());
  std::sort(abs_vals.begin(), abs_vals.end());
  return std::adjacent_find(abs_vals.begin(), abs_vals.end()) == abs_vals.end();
}

/// Integral and l1 >= ... >= l_{m-1} >= |l_m|, with l_m >= 0 when k = 2m+1.
inline bool is_g0_dominant(const Weight& lambda) {
  if (!is_integral(lambda)) return false;
  const auto e = lambda.eps();
  const std::size_t m = e.size();
  for (std::size_t i = 0; i + 2 < m; ++i)
    if (e[i] < e[i + 1]) return false;
  if (m >= 2 && e[m - 2] < e[m - 1].abs()) return false;
  if (!lambda.type_d() && e[m - 1].sign() < 0) return false;
  return true;
}

/// g0-dominant, l = lambda_0 >= 0, and lambda_{l+1} = ... = lambda_m = 0 when l <= m-1.
inline bool is_g_dominant(const Weight& lambda) {
  if (!is_g0_dominant(lambda)) return false;
  if (lambda[0].sign() < 0) return false;
  const long l = lambda[0].to_long();
  const int m = lambda.m();
  if (l <= m - 1)
    for (long i = l + 1; i <= m; ++i)
      if (!lambda[static_cast<std::size_t>(i)].is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dominant conjugation.

/// Raised when a weight has no unique g0-dominant conjugate under the dot action.
class NotRegularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DominantConjugate {
  Weight weight;
  SignedPermutation w;
};

/// The unique g0-dominant weight nu = w . mu in the dot orbit of a regular mu.
///
/// Shift by rho, order the absolute values decreasingly and make them all
/// positive; for k = 2m an odd number of negative entries is absorbed by a
/// zero entry if there is one, otherwise the last coordinate stays negative.
inline DominantConjugate dominant_conjugate(const Weight& mu) {
  if (!is_regular(mu)) throw NotRegularError("no unique dominant conjugate: " + mu.str() + " is not regular");
  const int k = mu.k();
  const auto m = static_cast<std::size_t>(mu.m());
  const Weight shifted = rho_shift(mu);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return shifted[a + 1].abs() > shifted[b + 1].abs(); });

  std::vector<int> perm(m);
  std::vector<int> signs(m, 1);
  int negatives = 0;
  std::optional<std::size_t> zero_pos;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const std::size_t j = order[pos];
    perm[j] = static_cast<int>(pos);
    const HalfInt& c = shifted[j + 1];
    if (c.is_zero()) zero_pos = pos;
    if (c.sign() < 0) {
      signs[pos] = -1;
      ++negatives;
    }
  }
  if (mu.type_d() && negatives % 2 != 0) {
    if (zero_pos)
      signs[*zero_pos] = -1;
    else
      signs[m - 1] = -signs[m - 1];  // last coordinate ends up negative
  }

  SignedPermutation w(k, std::move(perm), std::move(signs));
  Weight nu = dot(w, mu);
  if (!is_g0_dominant(nu))
    throw NotRegularError("no g0-dominant weight in the dot orbit of " + mu.str());
  return DominantConjugate{std::move(nu), std::move(w)};
}

/// Every element of W0 for k, in a fixed order (m! * 2^m or half that).
inline std::vector<SignedPermutation> enumerate_w0(int k) {
  require_valid_k(k);
  const auto m = static_cast<std::size_t>(rank_of(k));
  std::vector<SignedPermutation> out;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> signs(m);
      int flips = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const bool neg = (mask >> i) & 1u;
        signs[i] = neg ? -1 : 1;
        flips += neg;
      }
      if (k % 2 == 0 && flips % 2 != 0) continue;
      out.emplace_back(k, perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Exhaustive search of the dot orbit; independent of dominant_conjugate.
/// Throws std::logic_error unless exactly one g0-dominant image exists.
inline Weight dominant_conjugate_bruteforce(const Weight& mu) {
  if (!is_regular(mu)) throw NotRegularError("no unique dominant conjugate: " + mu.str() + " is not regular");
  if (mu.m() > 6) throw std::invalid_argument("brute-force orbit search is limited to m <= 6");
  std::vector<Weight> found;
  for (const auto& w : enumerate_w0(mu.k())) {
    Weight image = dot(w, mu);
    if (is_g0_dominant(image) && std::find(found.begin(), found.end(), image) == found.end())
      found.push_back(std::move(image));
  }
  if (found.size() != 1)
    throw std::logic_error("dot orbit of " + mu.str() + " contains " + std::to_string(found.size()) +
                           " g0-dominant weights");
  return found.front();
}

}  // namespace osp
