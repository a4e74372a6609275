#pragma once

#include <ostream>
#include <string>

#include "stfib/rational.hpp"

namespace stfib {

/// A closed interval [lo, hi] of exact rationals certified to contain some real value.
class Enclosure {
 public:
  /// Throws Errc::InvalidArgument when lo > hi.
  Enclosure(BigRational lo, BigRational hi);

  static Enclosure point(const BigRational& x) { return Enclosure(x, x); }

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  BigRational width() const { return hi_ - lo_; }
  BigRational midpoint() const { return (lo_ + hi_) / BigRational(2); }

  bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool strictly_positive() const { return lo_.sign() > 0; }

  /// Interval of |x| for x in this enclosure.
  Enclosure abs() const;

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  friend Enclosure operator+(const Enclosure& x, const Enclosure& y) {
    return Enclosure(x.lo_ + y.lo_, x.hi_ + y.hi_);
  }
  friend Enclosure operator-(const Enclosure& x, const Enclosure& y) {
    return Enclosure(x.lo_ - y.hi_, x.hi_ - y.lo_);
  }
  friend Enclosure operator*(const Enclosure& x, const Enclosure& y);
  friend Enclosure operator*(const Enclosure& x, const BigRational& c);
  friend Enclosure operator*(const BigRational& c, const Enclosure& x) { return x * c; }
  /// Throws DivisionByZero if the divisor interval contains 0.
  friend Enclosure operator/(const Enclosure& x, const Enclosure& y);

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }
  friend std::ostream& operator<<(std::ostream& os, const Enclosure& e) { return os << e.str(); }

 private:
  BigRational lo_;
  BigRational hi_;
};

enum class DecimalRounding {
  Floor,
  Ceil,
  /// Toward zero; only for comparing against published truncated digits, never for certified output.
  Truncate,
};

/// Renders x with exactly `digits` fractional digits under the given rounding.
std::string render_decimal(const BigRational& x, int digits, DecimalRounding mode);

struct DecimalPair {
  std::string lo;
  std::string hi;
};

/// lo rounded toward −∞, hi toward +∞; the printed interval contains [lo, hi].
DecimalPair enclose_decimal(const Enclosure& e, int digits);

/// [lo, hi] with lo² ≤ x ≤ hi², 0 ≤ lo, and hi − lo ≤ width, by deterministic bisection.
Enclosure sqrt_enclosure(const BigRational& x, const BigRational& width);

/// 10^-digits as an exact rational.
BigRational pow10_inverse(int digits);

}  // namespace stfib
