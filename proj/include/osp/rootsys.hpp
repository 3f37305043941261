#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "osp/halfint.hpp"
#include "osp/weight.hpp"

namespace osp {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// The invariant form: (delta,delta) = -1, (delta,eps_i) = 0, (eps_i,eps_j) = [i==j].
inline Rational form(const Weight& x, const Weight& y) {
  x.check_same(y);
  Rational value = -(x[0] * y[0]);
  for (std::size_t i = 1; i < x.coords().size(); ++i) value += x[i] * y[i];
  return value;
}

struct Root {
  Weight vec;
  Parity parity;
  bool isotropic;
  std::string label;
};

/// s = 1 for k = 2m, s = 1/2 for k = 2m+1.
inline HalfInt s_of(int k) { return k % 2 == 0 ? HalfInt(1) : HalfInt::half(); }

/// Closed form rho = (s-m | m-s, ..., 1-s).
inline Weight rho_of(int k) {
  require_valid_k(k);
  const int m = rank_of(k);
  const HalfInt s = s_of(k);
  Weight rho = Weight::zero(k);
  rho[0] = s - m;
  for (int i = 1; i <= m; ++i) rho[static_cast<std::size_t>(i)] = HalfInt(m - i + 1) - s;
  return rho;
}

/// lambda + rho
inline Weight rho_shift(const Weight& lambda) { return lambda + rho_of(lambda.k()); }
/// shifted - rho
inline Weight rho_unshift(const Weight& shifted) { return shifted - rho_of(shifted.k()); }

struct RootSystemData {
  int k = 0;
  int m = 0;
  HalfInt s;
  std::vector<Root> simple_roots;
  std::vector<Root> pos_even;
  std::vector<Root> pos_odd;
  Weight rho = Weight::zero(3);
  Weight rho0 = Weight::zero(3);
  Weight rho1 = Weight::zero(3);
};

namespace detail {

inline Root make_root(const Weight& v, Parity p, std::string label) {
  const bool iso = form(v, v) == 0;
  return Root{v, p, iso, std::move(label)};
}

inline std::string eps_label(int i) { return "eps" + std::to_string(i); }

inline Weight half_sum(const std::vector<Root>& roots, int k) {
  Weight sum = Weight::zero(k);
  for (const auto& r : roots) sum += r.vec;
  Weight half = Weight::zero(k);
  for (std::size_t i = 0; i < sum.coords().size(); ++i)
    half[i] = HalfInt::from_rational(sum[i].to_rational() / 2);
  return half;
}

}  // namespace detail

/// Root data of osp(k|2), k > 2.
///
/// rho0 and rho1 are computed as half-sums of the positive even and odd
/// roots; their difference is checked against the closed form rho_of(k).
inline RootSystemData build_root_system(int k) {
  require_valid_k(k);
  const int m = rank_of(k);
  const bool d_type = k % 2 == 0;
  const Weight delta = Weight::delta(k);
  auto eps = [k](int i) { return Weight::epsilon(k, i); };

  RootSystemData rs;
  rs.k = k;
  rs.m = m;
  rs.s = s_of(k);

  rs.simple_roots.push_back(detail::make_root(delta - eps(1), Parity::Odd, "delta-eps1"));
  for (int i = 1; i < m; ++i)
    rs.simple_roots.push_back(detail::make_root(eps(i) - eps(i + 1), Parity::Even,
                                                detail::eps_label(i) + "-" + detail::eps_label(i + 1)));
  if (d_type)
    rs.simple_roots.push_back(detail::make_root(eps(m - 1) + eps(m), Parity::Even,
                                                detail::eps_label(m - 1) + "+" + detail::eps_label(m)));
  else
    rs.simple_roots.push_back(detail::make_root(eps(m), Parity::Even, detail::eps_label(m)));

  rs.pos_even.push_back(detail::make_root(2L * delta, Parity::Even, "2delta"));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      rs.pos_even.push_back(detail::make_root(eps(i) - eps(j), Parity::Even,
                                              detail::eps_label(i) + "-" + detail::eps_label(j)));
      rs.pos_even.push_back(detail::make_root(eps(i) + eps(j), Parity::Even,
                                              detail::eps_label(i) + "+" + detail::eps_label(j)));
    }
  if (!d_type)
    for (int i = 1; i <= m; ++i) rs.pos_even.push_back(detail::make_root(eps(i), Parity::Even, detail::eps_label(i)));

  for (int i = 1; i <= m; ++i) {
    rs.pos_odd.push_back(detail::make_root(delta + eps(i), Parity::Odd, "delta+" + detail::eps_label(i)));
    rs.pos_odd.push_back(detail::make_root(delta - eps(i), Parity::Odd, "delta-" + detail::eps_label(i)));
  }
  if (!d_type) rs.pos_odd.push_back(detail::make_root(delta, Parity::Odd, "delta"));

  rs.rho0 = detail::half_sum(rs.pos_even, k);
  rs.rho1 = detail::half_sum(rs.pos_odd, k);
  rs.rho = rs.rho0 - rs.rho1;
  if (rs.rho != rho_of(k))
    throw std::logic_error("root system for k=" + std::to_string(k) + ": half-sum rho " + rs.rho.str() +
                           " disagrees with closed form " + rho_of(k).str());
  return rs;
}

}  // namespace osp
