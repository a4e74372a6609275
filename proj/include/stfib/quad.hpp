#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "stfib/enclosure.hpp"
#include "stfib/rational.hpp"

namespace stfib {

/**
 * Exact element a + b·√Δ of the quadratic field Q(√Δ), Δ ≥ 0.
 *
 * When Δ is the square of a rational the radical folds into the rational
 * part, so b = 0 always holds in that case. Elements combine only with
 * elements over the same radicand.
 */
class QuadElem {
 public:
  QuadElem(BigRational a, BigRational b, BigRational radicand);

  /// The rational a embedded in Q(√radicand).
  static QuadElem rational(BigRational a, BigRational radicand) {
    return QuadElem(std::move(a), BigRational(0), std::move(radicand));
  }

  const BigRational& rational_part() const { return a_; }
  const BigRational& radical_part() const { return b_; }
  const BigRational& radicand() const { return radicand_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadElem conjugate() const { return QuadElem(a_, -b_, radicand_); }
  /// Field norm a² − b²Δ.
  BigRational norm() const { return a_ * a_ - b_ * b_ * radicand_; }

  /// Exact sign of a + b√Δ.
  int sign() const;
  QuadElem abs() const { return sign() < 0 ? -*this : *this; }

  /// Rational enclosure of the real value with width ≤ `width`.
  Enclosure enclose(const BigRational& width) const;
  /// Enclosure obtained by substituting an enclosure of √Δ.
  Enclosure enclose_with(const Enclosure& sqrt_radicand) const;

  QuadElem operator-() const { return QuadElem(-a_, -b_, radicand_); }
  QuadElem& operator+=(const QuadElem& rhs);
  QuadElem& operator-=(const QuadElem& rhs);
  QuadElem& operator*=(const QuadElem& rhs);
  QuadElem& operator/=(const QuadElem& rhs);
  QuadElem& operator*=(const BigRational& rhs);
  QuadElem& operator/=(const BigRational& rhs);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator*(QuadElem x, const BigRational& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const BigRational& y) { return x /= y; }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

  /// "a + b*sqrt(D)" (or just "a" when rational).
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.str(); }

 private:
  void require_same_radicand(const QuadElem& other) const;

  BigRational a_;
  BigRational b_;
  BigRational radicand_;
};

enum class QuadOp { Add, Sub, Mul, Div };

/// Field arithmetic in Q(√Δ). Errors: MismatchedRadicand, DivisionByZero.
QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op);

/// x^n by binary exponentiation, n ≥ 0.
QuadElem quad_pow(const QuadElem& x, std::uint64_t n);

/// Exact three-way comparison of two elements over the same radicand.
int compare(const QuadElem& x, const QuadElem& y);

}  // namespace stfib
