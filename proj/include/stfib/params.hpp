#pragma once

#include <string>

#include "stfib/quad.hpp"
#include "stfib/rational.hpp"

namespace stfib {

enum class Regime { PositiveDisc, ZeroDisc, NegativeDisc };

std::string regime_name(Regime r);

/// The parameter pair (s, t) of the recurrence {n+2} = s{n+1} + t{n}, with Δ = s² + 4t cached.
class STParams {
 public:
  /// Throws Errc::InvalidParameters when s or t is zero.
  STParams(BigRational s, BigRational t);

  static STParams parse(std::string_view s, std::string_view t);

  const BigRational& s() const { return s_; }
  const BigRational& t() const { return t_; }
  const BigRational& delta() const { return delta_; }
  Regime regime() const { return regime_; }

  bool is_integral() const { return s_.is_integer() && t_.is_integer(); }

  /// φ = (s + √Δ)/2 in Q(√Δ). Throws NegativeDiscriminant when Δ < 0.
  QuadElem phi() const;
  /// φ′ = (s − √Δ)/2.
  QuadElem phi_prime() const;
  /// The root of larger modulus, (|s| + √Δ)/2 (φ when s > 0, −φ′ otherwise).
  QuadElem major_root_abs() const;
  /// √Δ as an element of Q(√Δ).
  QuadElem sqrt_delta() const;

  /// (|s|, t), the parameters whose sequence is |{n}_{s,t}| when Δ > 0.
  STParams with_abs_s() const { return STParams(s_.abs(), t_); }

  std::string str() const { return "(" + s_.str() + "," + t_.str() + ")"; }

  friend bool operator==(const STParams& a, const STParams& b) { return a.s_ == b.s_ && a.t_ == b.t_; }

 private:
  void require_real_roots() const;

  BigRational s_;
  BigRational t_;
  BigRational delta_;
  Regime regime_;
};

}  // namespace stfib
