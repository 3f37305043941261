#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "osp/halfint.hpp"

namespace osp {

/// Number of epsilon coordinates for osp(k|2): floor(k/2).
constexpr int rank_of(int k) { return k / 2; }

inline void require_valid_k(int k) {
  if (k <= 2) throw std::invalid_argument("osp(k|2) requires k > 2, got k=" + std::to_string(k));
}

/// A weight (l0 | l1, ..., lm) of osp(k|2) in the delta/epsilon basis.
///
/// Index 0 is the delta coordinate; indices 1..m are the epsilon
/// coordinates. The algebra parameter k travels with the weight so that
/// arithmetic across different algebras is rejected.
class Weight {
 public:
  Weight(int k, std::vector<HalfInt> coords) : k_(k), coords_(std::move(coords)) {
    require_valid_k(k_);
    if (coords_.size() != static_cast<std::size_t>(rank_of(k_)) + 1)
      throw std::invalid_argument("weight for k=" + std::to_string(k_) + " needs " +
                                  std::to_string(rank_of(k_) + 1) + " coordinates, got " +
                                  std::to_string(coords_.size()));
  }
  Weight(int k, std::initializer_list<HalfInt> coords)
      : Weight(k, std::vector<HalfInt>(coords)) {}

  static Weight zero(int k) { return Weight(k, std::vector<HalfInt>(rank_of(k) + 1, HalfInt{})); }
  /// delta
  static Weight delta(int k) {
    Weight w = zero(k);
    w.coords_[0] = 1;
    return w;
  }
  /// epsilon_i, 1 <= i <= m
  static Weight epsilon(int k, int i) {
    Weight w = zero(k);
    if (i < 1 || i > w.m()) throw std::out_of_range("epsilon index out of range");
    w.coords_[static_cast<std::size_t>(i)] = 1;
    return w;
  }

  int k() const { return k_; }
  int m() const { return rank_of(k_); }
  bool type_d() const { return k_ % 2 == 0; }

  const HalfInt& operator[](std::size_t i) const { return coords_[i]; }
  HalfInt& operator[](std::size_t i) { return coords_[i]; }
  const HalfInt& delta_coord() const { return coords_[0]; }
  /// epsilon coordinates l1..lm
  std::span<const HalfInt> eps() const { return std::span<const HalfInt>(coords_).subspan(1); }
  const std::vector<HalfInt>& coords() const { return coords_; }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const {
    Weight r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend Weight operator*(long n, Weight w) {
    for (auto& c : w.coords_) c = n * c;
    return w;
  }
  friend Weight operator*(const BigInt& n, Weight w) {
    for (auto& c : w.coords_) c = n * c;
    return w;
  }

  friend bool operator==(const Weight& a, const Weight& b) = default;

  void check_same(const Weight& o) const {
    if (k_ != o.k_)
      throw std::invalid_argument("weights belong to different algebras (k=" + std::to_string(k_) +
                                  " vs k=" + std::to_string(o.k_) + ")");
  }

  /// Literal form "l0|l1,...,lm".
  std::string str() const {
    std::string out = coords_[0].str() + "|";
    for (std::size_t i = 1; i < coords_.size(); ++i) {
      if (i > 1) out += ",";
      out += coords_[i].str();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << "(" << w.str() << ")"; }

 private:
  int k_;
  std::vector<HalfInt> coords_;
};

/// Raised by parse_weight; position() is the 0-based offset of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("weight literal: " + what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// entry := ['-'] digits [ '/2' ]
inline HalfInt parse_entry(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t digits_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == digits_begin) throw ParseError(pos, "expected digit");
  BigInt value(std::string(text.substr(digits_begin, pos - digits_begin)));
  if (negative) value = -value;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (pos >= text.size() || text[pos] != '2') throw ParseError(pos, "only the denominator 2 is allowed");
    ++pos;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
      throw ParseError(pos, "only the denominator 2 is allowed");
    if (!is_odd(value)) throw ParseError(start, "half-integer numerator must be odd");
    return HalfInt::from_doubled(value);
  }
  return HalfInt::from_integer(value);
}

}  // namespace detail

/// Parse "l0|l1,...,lm"; entries are integers or "p/2" with p odd.
/// The printed form of a Weight parses back to the same Weight.
inline Weight parse_weight(int k, std::string_view text) {
  require_valid_k(k);
  std::size_t pos = 0;
  std::vector<HalfInt> coords;
  coords.push_back(detail::parse_entry(text, pos));
  if (pos >= text.size() || text[pos] != '|') throw ParseError(pos, "expected '|'");
  ++pos;
  coords.push_back(detail::parse_entry(text, pos));
  while (pos < text.size()) {
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
    coords.push_back(detail::parse_entry(text, pos));
  }
  const std::size_t want = static_cast<std::size_t>(rank_of(k)) + 1;
  if (coords.size() != want)
    throw ParseError(text.size(), "expected " + std::to_string(want - 1) + " epsilon coordinates for k=" +
                                      std::to_string(k) + ", got " + std::to_string(coords.size() - 1));
  return Weight(k, std::move(coords));
}

}  // namespace osp
