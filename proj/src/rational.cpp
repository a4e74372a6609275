#include "stfib/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "stfib/error.hpp"

namespace stfib {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MismatchedRadicand: return "MismatchedRadicand";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::NegativeDiscriminant: return "NegativeDiscriminant";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroFactorInFactorial: return "ZeroFactorInFactorial";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::WrongRegime: return "WrongRegime";
    case Errc::NonNegativeT: return "NonNegativeT";
    case Errc::EmptySeries: return "EmptySeries";
    case Errc::UnitModulusQ: return "UnitModulusQ";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotConvergentAtOne: return "NotConvergentAtOne";
    case Errc::WidthUnreachable: return "WidthUnreachable";
    case Errc::NotInStarSet: return "NotInStarSet";
    case Errc::NonConvergentTail: return "NonConvergentTail";
    case Errc::DepthTooSmall: return "DepthTooSmall";
    case Errc::IntegerU: return "IntegerU";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(Errc::ParseError, "not a rational literal: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(digits), 10);
  return (!s.empty() && s.front() == '-') ? mpz_class(-z) : z;
}

}  // namespace

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : value_(q) {
  if (value_.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text, text));
  const mpz_class p = parse_integer(text.substr(0, slash), text);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) {
    throw Error(Errc::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  return BigRational(p, mpz_class(std::string(den), 10));
}

BigRational BigRational::parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return BigRational(parse_integer(text, text));
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (!all_digits(frac)) {
    throw Error(Errc::ParseError, "not a decimal literal: '" + std::string(text) + "'");
  }
  const bool negative = !int_part.empty() && int_part.front() == '-';
  std::string_view magnitude = int_part;
  if (!magnitude.empty() && (magnitude.front() == '-' || magnitude.front() == '+')) magnitude.remove_prefix(1);
  if (!all_digits(magnitude)) {
    throw Error(Errc::ParseError, "not a decimal literal: '" + std::string(text) + "'");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  mpz_class combined(std::string(magnitude) + std::string(frac), 10);
  if (negative) combined = -combined;
  return BigRational(combined, scale);
}

BigRational BigRational::from_double(double v) {
  if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "non-finite double");
  BigRational r;
  r.value_ = mpq_class(v);
  return r;
}

BigRational BigRational::abs() const {
  BigRational r;
  r.value_ = ::abs(value_);
  return r;
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "reciprocal of zero");
  BigRational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

BigRational BigRational::pow(std::int64_t exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class n, d;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  BigRational r;
  // Powers of coprime integers stay coprime, no canonicalization needed.
  r.value_.get_num() = n;
  r.value_.get_den() = d;
  return r;
}

mpz_class BigRational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class BigRational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

bool BigRational::is_perfect_square(BigRational* root) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(value_.get_num_mpz_t()) || !mpz_perfect_square_p(value_.get_den_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
    *root = BigRational(n, d);
  }
  return true;
}

std::string BigRational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.value_ = -value_;
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace stfib
