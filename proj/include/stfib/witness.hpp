#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stfib/enclosure.hpp"
#include "stfib/params.hpp"
#include "stfib/rational.hpp"

namespace stfib {

enum class Verdict { Certified, ThresholdNotBelowOne, Inconclusive };

std::string verdict_name(Verdict v);

/// Certificate data for one candidate denominator q.
struct WitnessReport {
  std::size_t q = 0;
  std::size_t depth = 0;
  Enclosure quantity = Enclosure::point(BigRational(0));
  BigRational threshold;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> hypothesis_notes;
};

/// Certified iff threshold < 1, 0 < quantity.lo and quantity.hi < threshold, all compared exactly.
Verdict decide_verdict(const Enclosure& quantity, const BigRational& threshold);

/**
 * N_q = U^{C(q+1,2)}·{q}!·q·(e − s_q) for e = Σ U^{−C(k,2)}/{k}!, threshold q/{q}.
 *
 * e − s_q is enclosed by [s_d − s_q, s_d − s_q + R_d] with R_d the plus-sign remainder bound.
 * Requires integer s ≥ 1 and t, Δ > 0, U ≥ 1. U = 1 and |s| + t ≤ 1 are recorded as notes.
 * Errors: HypothesisViolated, DepthTooSmall (depth ≤ q), InvalidArgument (q = 0).
 */
WitnessReport witness_direct(const STParams& params, const BigRational& big_u, std::size_t q, std::size_t depth);

/**
 * U^{C(2m−1,2)}·{2m−1}!·q·|e⁻¹ − s_{2m−1}| for the alternating series, threshold q/{2m}.
 *
 * q defaults to 2m − 1. An even depth is lowered to the preceding odd index.
 * Errors: as witness_direct; DepthTooSmall when the odd depth is ≤ 2m − 1.
 */
WitnessReport witness_inverse(const STParams& params, const BigRational& big_u, std::size_t m, std::size_t depth,
                              std::optional<std::size_t> q = std::nullopt);

struct ScanSummary {
  std::size_t certified = 0;
  std::size_t threshold_not_below_one = 0;
  std::size_t inconclusive = 0;
};

/// witness_direct for q = q_min..q_max in ascending order. depth(q) = q + depth_offset when
/// `fixed_depth` is empty. Work is spread across `threads` workers (0 picks the hardware count).
std::vector<WitnessReport> witness_scan(const STParams& params, const BigRational& big_u, std::size_t q_min,
                                        std::size_t q_max, std::optional<std::size_t> fixed_depth,
                                        std::size_t depth_offset = 30, unsigned threads = 0);

ScanSummary summarize(const std::vector<WitnessReport>& reports);

struct DivisibilityReport {
  std::size_t q = 0;
  BigRational big_u;
  mpz_class numerator;            // n in U = n/m
  mpz_class denominator;          // m in U = n/m
  mpz_class denominator_power;    // m^{C(q+1,2)}
  BigRational product;            // U^{C(q+1,2)}·{q}!·q·s_q
  bool product_is_integer = false;
  mpz_class reduced_denominator;  // denominator of `product` in lowest terms
};

/// Exact divisibility data for non-integer U = n/m > 1. Errors: IntegerU, HypothesisViolated.
DivisibilityReport fractional_u_divisibility(const STParams& params, const BigRational& big_u, std::size_t q);

}  // namespace stfib
