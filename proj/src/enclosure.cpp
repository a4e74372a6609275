#include "stfib/enclosure.hpp"

#include <algorithm>

#include "stfib/error.hpp"

namespace stfib {

Enclosure::Enclosure(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error(Errc::InvalidArgument, "enclosure with lo > hi: " + lo_.str() + " > " + hi_.str());
}

Enclosure Enclosure::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Enclosure(BigRational(0), std::max(-lo_, hi_));
}

Enclosure operator*(const Enclosure& x, const Enclosure& y) {
  const BigRational p[] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return Enclosure(*mn, *mx);
}

Enclosure operator*(const Enclosure& x, const BigRational& c) {
  if (c.sign() >= 0) return Enclosure(x.lo_ * c, x.hi_ * c);
  return Enclosure(x.hi_ * c, x.lo_ * c);
}

Enclosure operator/(const Enclosure& x, const Enclosure& y) {
  if (y.lo_.sign() <= 0 && y.hi_.sign() >= 0) {
    throw Error(Errc::DivisionByZero, "divisor enclosure contains zero");
  }
  return x * Enclosure(y.hi_.reciprocal(), y.lo_.reciprocal());
}

BigRational pow10_inverse(int digits) {
  return BigRational(10).pow(-digits);
}

std::string render_decimal(const BigRational& x, int digits, DecimalRounding mode) {
  if (digits < 1) throw Error(Errc::InvalidArgument, "digits must be >= 1");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigRational scaled = x * BigRational(scale);
  mpz_class k;
  switch (mode) {
    case DecimalRounding::Floor: k = scaled.floor(); break;
    case DecimalRounding::Ceil: k = scaled.ceil(); break;
    case DecimalRounding::Truncate: k = scaled.sign() < 0 ? scaled.ceil() : scaled.floor(); break;
  }
  const bool negative = k < 0;
  const mpz_class mag = ::abs(k);
  const mpz_class int_part = mag / scale;
  std::string frac = mpz_class(mag % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (negative ? "-" : "") + int_part.get_str() + "." + frac;
}

DecimalPair enclose_decimal(const Enclosure& e, int digits) {
  return {render_decimal(e.lo(), digits, DecimalRounding::Floor),
          render_decimal(e.hi(), digits, DecimalRounding::Ceil)};
}

Enclosure sqrt_enclosure(const BigRational& x, const BigRational& width) {
  if (x.sign() < 0) throw Error(Errc::NegativeRadicand, "square root of " + x.str());
  if (width.sign() <= 0) throw Error(Errc::InvalidArgument, "width must be positive");
  BigRational root;
  if (x.is_perfect_square(&root)) return Enclosure::point(root);

  BigRational lo(0);
  BigRational hi = std::max(BigRational(1), x);
  const BigRational half(mpz_class(1), mpz_class(2));
  while (hi - lo > width) {
    BigRational mid = (lo + hi) * half;
    if (mid * mid <= x) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace stfib
