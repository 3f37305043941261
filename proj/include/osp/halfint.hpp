#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace osp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_odd(const BigInt& n) { return boost::multiprecision::bit_test(boost::multiprecision::abs(n), 0); }

/// Exact value n/2 for an arbitrary-precision integer n.
///
/// Coordinates of osp(2m+1|2) weights live in Z or 1/2+Z, so everything
/// weight-related is stored doubled. Products of two half-integers leave
/// the type and are returned as Rational.
class HalfInt {
 public:
  HalfInt() = default;
  HalfInt(int v) : doubled_(BigInt(v) * 2) {}  // NOLINT: implicit from int
  HalfInt(long v) : doubled_(BigInt(v) * 2) {}  // NOLINT
  HalfInt(long long v) : doubled_(BigInt(v) * 2) {}  // NOLINT

  static HalfInt from_doubled(BigInt doubled) {
    HalfInt h;
    h.doubled_ = std::move(doubled);
    return h;
  }
  static HalfInt from_integer(const BigInt& n) { return from_doubled(n * 2); }
  static HalfInt half() { return from_doubled(1); }

  /// Exact conversion; throws if r is not an integer or half-integer.
  static HalfInt from_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return from_doubled(num * 2);
    if (den == 2) return from_doubled(num);
    throw std::domain_error("rational " + r.str() + " is not a half-integer");
  }

  const BigInt& doubled() const { return doubled_; }

  bool is_integer() const { return !is_odd(doubled_); }
  bool is_zero() const { return doubled_.is_zero(); }
  int sign() const { return doubled_.sign(); }

  /// Integer value; throws unless is_integer().
  BigInt to_integer() const {
    if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not an integer");
    return doubled_ / 2;
  }

  long to_long() const { return to_integer().convert_to<long>(); }

  Rational to_rational() const { return Rational(doubled_, BigInt(2)); }

  HalfInt abs() const { return from_doubled(boost::multiprecision::abs(doubled_)); }

  HalfInt operator-() const { return from_doubled(-doubled_); }
  HalfInt& operator+=(const HalfInt& o) {
    doubled_ += o.doubled_;
    return *this;
  }
  HalfInt& operator-=(const HalfInt& o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
  friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
  friend HalfInt operator*(const BigInt& n, const HalfInt& h) { return from_doubled(n * h.doubled_); }
  friend HalfInt operator*(const HalfInt& h, const BigInt& n) { return from_doubled(n * h.doubled_); }
  friend HalfInt operator*(long n, const HalfInt& h) { return from_doubled(n * h.doubled_); }
  friend HalfInt operator*(const HalfInt& h, long n) { return from_doubled(n * h.doubled_); }
  friend Rational operator*(const HalfInt& a, const HalfInt& b) {
    return Rational(a.doubled_ * b.doubled_, BigInt(4));
  }

  friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.doubled_ == b.doubled_; }
  friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
    const int c = a.doubled_.compare(b.doubled_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "p/2" otherwise.
  std::string str() const {
    if (is_integer()) return BigInt(doubled_ / 2).str();
    return doubled_.str() + "/2";
  }

  friend std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.str(); }

 private:
  BigInt doubled_ = 0;
};

}  // namespace osp
