#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stfib {

/**
 * Exact rational number with arbitrary-precision numerator and denominator.
 *
 * Invariants: always reduced to lowest terms, denominator > 0, zero is 0/1.
 * Every constructor canonicalizes, so equality is plain field equality.
 */
class BigRational {
 public:
  BigRational() = default;

  template <std::signed_integral T>
  BigRational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  BigRational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit BigRational(const mpz_class& integer) : value_(integer) {}
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpq_class& q);

  /// Parses "p/q" or "p" (optional leading sign on p). Throws Errc::ParseError.
  static BigRational parse(std::string_view text);

  /// Parses a plain decimal literal such as "-3.70416" exactly.
  static BigRational parse_decimal(std::string_view text);

  /// Exact binary value of a finite double.
  static BigRational from_double(double v);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigRational abs() const;
  BigRational reciprocal() const;
  /// Integer power; negative exponents invert (zero base then throws).
  BigRational pow(std::int64_t exponent) const;

  mpz_class floor() const;
  mpz_class ceil() const;

  /// Whether this is the square of a rational; if so `root` receives the non-negative root.
  bool is_perfect_square(BigRational* root = nullptr) const;

  /// Approximate value; never used inside certified computations.
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

 private:
  mpq_class value_{0};
};

/// Binomial coefficient C(n, 2) as a 64-bit exponent.
constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace stfib
