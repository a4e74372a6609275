#include "stfib/quad.hpp"

#include "stfib/error.hpp"

namespace stfib {

QuadElem::QuadElem(BigRational a, BigRational b, BigRational radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) throw Error(Errc::NegativeRadicand, "radicand " + radicand_.str());
  BigRational root;
  if (!b_.is_zero() && radicand_.is_perfect_square(&root)) {
    a_ += b_ * root;
    b_ = BigRational(0);
  }
}

void QuadElem::require_same_radicand(const QuadElem& other) const {
  if (radicand_ != other.radicand_) {
    throw Error(Errc::MismatchedRadicand, "sqrt(" + radicand_.str() + ") vs sqrt(" + other.radicand_.str() + ")");
  }
}

int QuadElem::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a² against b²Δ.
  const auto c = a_ * a_ <=> b_ * b_ * radicand_;
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

Enclosure QuadElem::enclose_with(const Enclosure& sqrt_radicand) const {
  return Enclosure::point(a_) + sqrt_radicand * b_;
}

Enclosure QuadElem::enclose(const BigRational& width) const {
  if (b_.is_zero()) return Enclosure::point(a_);
  return enclose_with(sqrt_enclosure(radicand_, width / b_.abs()));
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
  require_same_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
  require_same_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
  require_same_radicand(rhs);
  BigRational a = a_ * rhs.a_ + b_ * rhs.b_ * radicand_;
  BigRational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
  require_same_radicand(rhs);
  if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in Q(sqrt(" + radicand_.str() + "))");
  // Nonzero norm: Δ is not a rational square whenever rhs.b ≠ 0.
  const BigRational n = rhs.norm();
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadElem& QuadElem::operator*=(const BigRational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

QuadElem& QuadElem::operator/=(const BigRational& rhs) {
  a_ /= rhs;
  b_ /= rhs;
  return *this;
}

std::string QuadElem::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + radicand_.str() + ")";
}

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op) {
  switch (op) {
    case QuadOp::Add: return x + y;
    case QuadOp::Sub: return x - y;
    case QuadOp::Mul: return x * y;
    case QuadOp::Div: return x / y;
  }
  throw Error(Errc::Internal, "unknown QuadOp");
}

QuadElem quad_pow(const QuadElem& x, std::uint64_t n) {
  QuadElem result = QuadElem::rational(BigRational(1), x.radicand());
  QuadElem base = x;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

int compare(const QuadElem& x, const QuadElem& y) {
  return (x - y).sign();
}

}  // namespace stfib
