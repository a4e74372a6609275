#pragma once

#include <cstdint>
#include <optional>

#include "stfib/params.hpp"
#include "stfib/quad.hpp"
#include "stfib/rational.hpp"

namespace stfib {

/**
 * Branch of the double root in the Δ = 0 regime, named after the upper/lower
 * sign in ±i√t. With t < 0, ±i√t = ∓√(−t), so
 *   Plus  : ρ = −√(−t), s = −2√(−t)
 *   Minus : ρ = +√(−t), s = +2√(−t)
 */
enum class RootBranch { Plus, Minus };

/// Exact value coefficient · ρ^root_power with ρ = ±√(−t) kept symbolic.
struct ZeroDiscValue {
  BigRational coefficient;
  std::int64_t root_power = 0;
  BigRational t;
  RootBranch branch = RootBranch::Plus;

  /// The value as an element of Q(√(−t)).
  QuadElem value() const;
  /// Rational value; throws WrongRegime if it is irrational.
  BigRational rational_value() const;
};

/// Floating evaluation with a rigorous bound |value − true| ≤ error_bound.
struct NegDiscValue {
  double value = 0.0;
  double error_bound = 0.0;
};

/// s = ∓2√(−t) for the branch, when that is rational.
std::optional<BigRational> zero_disc_s(const BigRational& t, RootBranch branch);

/// {n} = n·ρ^{n−1}. Errors: NonNegativeT.
ZeroDiscValue fib_zero_disc(const BigRational& t, RootBranch branch, std::uint64_t n);
/// {n}! = ρ^{C(n,2)}·n!.
ZeroDiscValue factorial_zero_disc(const BigRational& t, RootBranch branch, std::uint64_t n);
/// ρ^{k(n−k)}·C(n,k). Errors: NonNegativeT, IndexOutOfRange.
ZeroDiscValue fibonomial_zero_disc(const BigRational& t, RootBranch branch, std::uint64_t n, std::uint64_t k);

/// {n} = r^{n−1} sin(nθ)/sin θ, r = √(−t), θ = atan2(√(−Δ), s). Errors: WrongRegime.
NegDiscValue fib_neg_disc(const STParams& params, std::uint64_t n);
/// ∏_{k≤n} {k} from the polar form. Errors: WrongRegime, ZeroFactorInFactorial.
NegDiscValue factorial_neg_disc(const STParams& params, std::uint64_t n);

}  // namespace stfib
