#include "stfib/params.hpp"

#include "stfib/error.hpp"

namespace stfib {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::PositiveDisc: return "PositiveDisc";
    case Regime::ZeroDisc: return "ZeroDisc";
    case Regime::NegativeDisc: return "NegativeDisc";
  }
  return "Unknown";
}

STParams::STParams(BigRational s, BigRational t) : s_(std::move(s)), t_(std::move(t)) {
  if (s_.is_zero() || t_.is_zero()) {
    throw Error(Errc::InvalidParameters, "s and t must be nonzero, got s=" + s_.str() + " t=" + t_.str());
  }
  delta_ = s_ * s_ + BigRational(4) * t_;
  const int sign = delta_.sign();
  regime_ = sign > 0 ? Regime::PositiveDisc : (sign == 0 ? Regime::ZeroDisc : Regime::NegativeDisc);
}

STParams STParams::parse(std::string_view s, std::string_view t) {
  return STParams(BigRational::parse(s), BigRational::parse(t));
}

void STParams::require_real_roots() const {
  if (regime_ == Regime::NegativeDisc) {
    throw Error(Errc::NegativeDiscriminant, "roots of x^2 - s x - t are not real for " + str());
  }
}

QuadElem STParams::phi() const {
  require_real_roots();
  const BigRational half(mpz_class(1), mpz_class(2));
  return QuadElem(s_ * half, half, delta_);
}

QuadElem STParams::phi_prime() const {
  require_real_roots();
  const BigRational half(mpz_class(1), mpz_class(2));
  return QuadElem(s_ * half, -half, delta_);
}

QuadElem STParams::major_root_abs() const {
  require_real_roots();
  const BigRational half(mpz_class(1), mpz_class(2));
  return QuadElem(s_.abs() * half, half, delta_);
}

QuadElem STParams::sqrt_delta() const {
  require_real_roots();
  return QuadElem(BigRational(0), BigRational(1), delta_);
}

}  // namespace stfib
