#include "stfib/sequences.hpp"

#include <bit>

#include "stfib/error.hpp"
#include "stfib/quad.hpp"

namespace stfib {

SeqCache::SeqCache(STParams params) : params_(std::move(params)) {
  values_ = {BigRational(0), BigRational(1)};
  fibotorials_ = {BigRational(1), BigRational(1)};
}

void SeqCache::grow_to(std::size_t n) {
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    BigRational next = params_.s() * values_[m - 1] + params_.t() * values_[m - 2];
    if (next.is_zero() && !first_zero_) first_zero_ = m;
    fibotorials_.push_back(fibotorials_.back() * next);
    values_.push_back(std::move(next));
  }
}

BigRational SeqCache::fib(std::size_t n) {
  grow_to(n);
  return values_[n];
}

BigRational SeqCache::fibotorial(std::size_t n) {
  grow_to(n);
  if (first_zero_ && *first_zero_ <= n) {
    throw Error(Errc::ZeroFactorInFactorial,
                "{" + std::to_string(*first_zero_) + "}_" + params_.str() + " = 0 inside {" + std::to_string(n) + "}!");
  }
  return fibotorials_[n];
}

BigRational fib(const STParams& params, std::size_t n) {
  BigRational prev(0);
  BigRational cur(1);
  if (n == 0) return prev;
  for (std::size_t k = 1; k < n; ++k) {
    BigRational next = params.s() * cur + params.t() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<mpz_class, mpz_class> fib_fast_pair(const mpz_class& s, const mpz_class& t, std::uint64_t n) {
  mpz_class a = 0;  // U_k
  mpz_class b = 1;  // U_{k+1}
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    // U_{2k} = U_k(2U_{k+1} − sU_k), U_{2k+1} = U_{k+1}² + tU_k²
    mpz_class even = a * (2 * b - s * a);
    mpz_class odd = b * b + t * a * a;
    if ((n >> bit) & 1U) {
      b = s * odd + t * even;
      a = std::move(odd);
    } else {
      a = std::move(even);
      b = std::move(odd);
    }
  }
  return {std::move(a), std::move(b)};
}

BigRational fib_fast(const STParams& params, std::uint64_t n) {
  if (n == 0) return BigRational(0);
  // Clear denominators with the deformation a = D: {n}_{s,t} = {n}_{Ds,D²t} / D^{n−1}.
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), params.s().den().get_mpz_t(), params.t().den().get_mpz_t());
  const BigRational scale{d};
  const BigRational s_int = params.s() * scale;
  const BigRational t_int = params.t() * scale * scale;
  auto [u, unused] = fib_fast_pair(s_int.num(), t_int.num(), n);
  if (d == 1) return BigRational(u);
  return BigRational(u) / scale.pow(static_cast<std::int64_t>(n - 1));
}

BigRational fib_binet(const STParams& params, std::uint64_t n) {
  if (params.regime() == Regime::NegativeDisc) {
    throw Error(Errc::NegativeDiscriminant, "Binet evaluation needs real roots; " + params.str() + " has Δ < 0");
  }
  if (n == 0) return BigRational(0);
  if (params.regime() == Regime::ZeroDisc) {
    // Double root s/2: the Binet quotient degenerates to n·ρ^{n−1}.
    const BigRational rho = params.s() / BigRational(2);
    return BigRational(n) * rho.pow(static_cast<std::int64_t>(n - 1));
  }
  const QuadElem phi = params.phi();
  const QuadElem phi_prime = params.phi_prime();
  const QuadElem value = (quad_pow(phi, n) - quad_pow(phi_prime, n)) / (phi - phi_prime);
  if (!value.is_rational()) {
    throw Error(Errc::Internal, "Binet quotient left a radical part: " + value.str());
  }
  return value.rational_part();
}

BigRational fibotorial(const STParams& params, std::size_t n) {
  SeqCache cache(params);
  return cache.fibotorial(n);
}

BigRational fibonomial(const STParams& params, std::size_t n, std::size_t k) {
  if (k > n) {
    throw Error(Errc::IndexOutOfRange, "fibonomial needs k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  SeqCache cache(params);
  return cache.fibotorial(n) / (cache.fibotorial(k) * cache.fibotorial(n - k));
}

STParams deform_params(const STParams& params, const BigRational& a) {
  if (a.is_zero()) throw Error(Errc::ZeroScale, "deformation scale must be nonzero");
  return STParams(a * params.s(), a * a * params.t());
}

namespace {

void require_positive_disc(const STParams& params, const char* op) {
  if (params.regime() != Regime::PositiveDisc) {
    throw Error(Errc::WrongRegime, std::string(op) + " requires Δ > 0, got " + params.str());
  }
}

template <typename Pred>
std::optional<std::size_t> scan_start(const STParams& params, std::size_t horizon, const char* op, Pred holds) {
  require_positive_disc(params, op);
  if (horizon < 8) throw Error(Errc::InvalidArgument, std::string(op) + " needs horizon >= 8");
  SeqCache cache(params.with_abs_s());
  if (!holds(cache, horizon)) return std::nullopt;
  std::size_t start = horizon;
  while (start > 0 && holds(cache, start - 1)) --start;
  return start;
}

}  // namespace

std::optional<std::size_t> lemma_gap_start(const STParams& params, std::size_t horizon) {
  return scan_start(params, horizon, "lemma_gap_start", [](SeqCache& c, std::size_t n) {
    return c.fib(n + 1) > c.fib(n) + BigRational(1);
  });
}

std::optional<std::size_t> lemma_n_le_fib_start(const STParams& params, std::size_t horizon) {
  return scan_start(params, horizon, "lemma_n_le_fib_start", [](SeqCache& c, std::size_t n) {
    return BigRational(n) <= c.fib(n);
  });
}

bool abs_identity_check(const STParams& params, std::size_t n_max) {
  require_positive_disc(params, "abs_identity_check");
  SeqCache signed_seq(params);
  SeqCache abs_seq(params.with_abs_s());
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (signed_seq.fib(n).abs() != abs_seq.fib(n)) return false;
  }
  return true;
}

}  // namespace stfib
