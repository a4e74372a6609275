#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stfib/params.hpp"
#include "stfib/rational.hpp"

namespace stfib {

/**
 * Memoized values {n}_{s,t} and fibotorials {n}_{s,t}! for one parameter pair.
 *
 * Grows monotonically. Not internally synchronized: use one instance per
 * thread. Returned values are copies and stay valid.
 */
class SeqCache {
 public:
  explicit SeqCache(STParams params);

  const STParams& params() const { return params_; }

  BigRational fib(std::size_t n);
  /// {1}{2}…{n}; throws ZeroFactorInFactorial if some {k} = 0 with k ≤ n.
  BigRational fibotorial(std::size_t n);

  /// Largest index stored so far.
  std::size_t size() const { return values_.size(); }

 private:
  void grow_to(std::size_t n);

  STParams params_;
  std::vector<BigRational> values_;
  std::vector<BigRational> fibotorials_;
  std::optional<std::size_t> first_zero_;
};

/// {n}_{s,t} by the linear recurrence.
BigRational fib(const STParams& params, std::size_t n);

/// {n}_{s,t} in O(log n) multiplications by fast doubling.
BigRational fib_fast(const STParams& params, std::uint64_t n);

/// ({n}, {n+1}) for integer s, t by fast doubling over big integers.
std::pair<mpz_class, mpz_class> fib_fast_pair(const mpz_class& s, const mpz_class& t, std::uint64_t n);

/// {n} = (φⁿ − φ′ⁿ)/(φ − φ′) evaluated in Q(√Δ); n·(s/2)^{n−1} when Δ = 0.
BigRational fib_binet(const STParams& params, std::uint64_t n);

BigRational fibotorial(const STParams& params, std::size_t n);

/// {n}!/({k}!{n−k}!). Errors: IndexOutOfRange, ZeroFactorInFactorial.
BigRational fibonomial(const STParams& params, std::size_t n, std::size_t k);

/// (a·s, a²·t), under which {n} scales by a^{n−1}.
STParams deform_params(const STParams& params, const BigRational& a);

/// Smallest N ≤ horizon such that {n+1} > {n} + 1 for every n in [N, horizon], on {n}_{|s|,t}.
std::optional<std::size_t> lemma_gap_start(const STParams& params, std::size_t horizon);

/// Smallest N ≤ horizon such that n ≤ {n} for every n in [N, horizon], on {n}_{|s|,t}.
std::optional<std::size_t> lemma_n_le_fib_start(const STParams& params, std::size_t horizon);

/// |{n}_{s,t}| = {n}_{|s|,t} for all n ≤ n_max. Requires Δ > 0.
bool abs_identity_check(const STParams& params, std::size_t n_max);

}  // namespace stfib
