#pragma once

#include <cstddef>
#include <vector>

#include "stfib/enclosure.hpp"
#include "stfib/params.hpp"
#include "stfib/quad.hpp"
#include "stfib/rational.hpp"
#include "stfib/series.hpp"

namespace stfib {

enum class SeriesSign { Plus, Alternating };

/**
 * The deformed Euler number Σ (±1)ᵏ u^{C(k,2)}/{k}!.
 *
 * `u` is the base that appears in the series. The inverse-base family
 * e_{s,t,U⁻¹} with U > 1 is built with inverse_base(), giving u = 1/U.
 */
class EulerSpec {
 public:
  /// Throws InvalidArgument unless u > 0.
  EulerSpec(STParams params, BigRational u, SeriesSign sign);

  static EulerSpec inverse_base(STParams params, const BigRational& big_u, SeriesSign sign);

  const STParams& params() const { return params_; }
  const BigRational& u() const { return u_; }
  SeriesSign sign() const { return sign_; }

 private:
  STParams params_;
  BigRational u_;
  SeriesSign sign_;
};

struct PhiEulerSpec {
  STParams params;
  RootChoice which = RootChoice::Phi;
  SeriesSign sign = SeriesSign::Plus;
};

/// s_0 … s_n for an arbitrary nonzero rational base.
std::vector<BigRational> partial_sums(const STParams& params, const BigRational& base, SeriesSign sign,
                                      std::size_t n);

BigRational partial_sum(const EulerSpec& spec, std::size_t n);

/**
 * Upper bound u^{C(n+1,2)}/({n}!·{n}) on e − s_n for the plus-sign series with base u = 1/U.
 *
 * Checked hypotheses (HypothesisViolated names the first failure): integer s ≥ 1 and t,
 * Δ > 0, U ≥ 1, n ≥ 1, and {n+1} ≥ {n} + 1.
 */
BigRational tail_bound_plus(const EulerSpec& spec, std::size_t n);

/**
 * Bound u^{C(2m,2)}/{2m}! on |e⁻¹ − s_{2m−1}| for the alternating series (first omitted term).
 *
 * Requires integer s ≥ 1 and t, Δ ≥ 0, U ≥ 1, so the term magnitudes are non-increasing
 * from index 2m; the ratio is also checked exactly over a window past 2m.
 */
BigRational tail_bound_alternating(const EulerSpec& spec, std::size_t m);

/// Certified enclosure of the full sum with width ≤ target_width.
/// Errors: WrongRegime (Δ < 0), NotConvergentAtOne, WidthUnreachable.
Enclosure enclosure(const EulerSpec& spec, const BigRational& target_width);

struct EstimateBounds {
  BigRational lower;
  BigRational upper;
};

/// lower = 2 + 1/s + Σ_{k=3..6} 1/{k}!, upper = lower + 1/({7}!·({8} − 1)).
/// Reproduces the classical order-6 estimate verbatim; it is not a certified enclosure.
EstimateBounds order6_estimate_bounds(const STParams& params);

struct PhiEulerResult {
  QuadElem partial_sum;
  Enclosure value;
  StarSet star_set = StarSet::None;
};

/// Partial sum with base φ or φ′ accumulated exactly in Q(√Δ), plus a certified enclosure
/// of the full series. Errors: NotInStarSet, NonConvergentTail.
PhiEulerResult phi_euler_enclosure(const PhiEulerSpec& spec, std::size_t n, const BigRational& sqrt_width);

/// Partial sums of e_{as,a²t,u⁻¹} and e_{s,t,(au)⁻¹} agree exactly for every order ≤ n,
/// for both the plus and the alternating series.
bool scaling_identity_check(const STParams& params, const BigRational& a, const BigRational& u, std::size_t n);

}  // namespace stfib
