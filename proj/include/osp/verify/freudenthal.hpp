#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace osp::verify {

// Weight multiplicities of simple so(k)-modules via Freudenthal's recursion
//
//   ((L+r, L+r) - (u+r, u+r)) m(u) = 2 sum_{a>0} sum_{j>=1} m(u + j a) (u + j a, a)
//
// Coordinates are doubled long longs in the orthonormal eps basis, so every
// inner product below is 4x its true value; the ratio is unaffected.
// Nothing here touches the Weyl product path, the HalfInt type, or the
// root-system builder.

using Coords = std::vector<long long>;

struct SoRoots {
  std::vector<Coords> positive;
  std::vector<Coords> simple;
  Coords rho;
};

inline SoRoots so_roots(int k) {
  const int m = k / 2;
  const bool b_type = k % 2 != 0;
  SoRoots r;
  auto unit = [m](int i, long long v) {
    Coords c(static_cast<std::size_t>(m), 0);
    c[static_cast<std::size_t>(i)] = v;
    return c;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Coords minus = unit(i, 2), plus = unit(i, 2);
      minus[static_cast<std::size_t>(j)] = -2;
      plus[static_cast<std::size_t>(j)] = 2;
      r.positive.push_back(minus);
      r.positive.push_back(plus);
    }
  if (b_type)
    for (int i = 0; i < m; ++i) r.positive.push_back(unit(i, 2));

  for (int i = 0; i + 1 < m; ++i) {
    Coords a = unit(i, 2);
    a[static_cast<std::size_t>(i + 1)] = -2;
    r.simple.push_back(a);
  }
  if (b_type) {
    r.simple.push_back(unit(m - 1, 2));
  } else if (m >= 2) {
    Coords a = unit(m - 2, 2);
    a[static_cast<std::size_t>(m - 1)] = 2;
    r.simple.push_back(a);
  }

  // rho = half the sum of positive roots
  r.rho.assign(static_cast<std::size_t>(m), 0);
  for (const auto& a : r.positive)
    for (int i = 0; i < m; ++i) r.rho[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)];
  for (auto& c : r.rho) c /= 2;
  return r;
}

inline long long ip(const Coords& x, const Coords& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0LL);
}

inline Coords add(Coords x, const Coords& y, long long scale = 1) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += scale * y[i];
  return x;
}

/// All nonzero weight multiplicities of L(highest), highest given doubled.
inline std::map<Coords, long long> freudenthal_multiplicities(int k, const Coords& highest) {
  if (k < 3 || highest.size() != static_cast<std::size_t>(k / 2))
    throw std::invalid_argument("freudenthal: bad highest weight");
  const SoRoots roots = so_roots(k);
  const Coords top_shift = add(highest, roots.rho);
  const long long top_norm = ip(top_shift, top_shift);
  // weights lie in the convex hull of the Weyl orbit of the highest weight
  long long bound = 0;
  for (long long c : highest) bound = std::max(bound, c < 0 ? -c : c);

  std::map<Coords, long long> mult;
  mult[highest] = 1;
  std::vector<Coords> level{highest};
  while (!level.empty()) {
    std::map<Coords, long long> next;
    for (const auto& mu : level)
      for (const auto& alpha : roots.simple) next.emplace(add(mu, alpha, -1), 0);

    std::vector<Coords> kept;
    for (auto& [mu, _] : next) {
      if (mult.count(mu)) continue;
      const Coords shifted = add(mu, roots.rho);
      const long long denom = top_norm - ip(shifted, shifted);
      long long numer = 0;
      for (const auto& alpha : roots.positive) {
        // every positive root has a +2 entry, which grows without bound along the string
        for (long long j = 1;; ++j) {
          const Coords up = add(mu, alpha, j);
          if (std::any_of(up.begin(), up.end(), [&](long long c) { return c > bound || c < -bound; })) break;
          if (auto it = mult.find(up); it != mult.end()) numer += it->second * ip(up, alpha);
        }
      }
      numer *= 2;
      if (denom == 0) {
        if (numer != 0) throw std::logic_error("freudenthal: zero denominator with nonzero numerator");
        continue;
      }
      if (numer % denom != 0) throw std::logic_error("freudenthal: multiplicity is not an integer");
      const long long m_mu = numer / denom;
      if (m_mu < 0) throw std::logic_error("freudenthal: negative multiplicity");
      if (m_mu == 0) continue;
      mult[mu] = m_mu;
      kept.push_back(mu);
    }
    level = std::move(kept);
  }
  return mult;
}

/// dim L(highest) as the sum of all weight multiplicities.
inline long long freudenthal_dimension(int k, const Coords& highest_doubled) {
  long long dim = 0;
  for (const auto& [mu, m] : freudenthal_multiplicities(k, highest_doubled)) dim += m;
  return dim;
}

}  // namespace osp::verify
