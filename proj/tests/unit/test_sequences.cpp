#include <doctest.h>

#include "stfib/error.hpp"
#include "stfib/sequences.hpp"
#include "support/oracles.hpp"

using namespace stfib;

namespace {

Errc code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected stfib::Error");
  return Errc::Internal;
}

std::vector<BigRational> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<BigRational> prefix(const STParams& p, std::size_t n) {
  std::vector<BigRational> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(fib(p, i));
  return out;
}

}  // namespace

TEST_CASE("named sequences") {
  CHECK(prefix(STParams(2, 1), 8) == ints({0, 1, 2, 5, 12, 29, 70, 169, 408}));
  CHECK(prefix(STParams(1, 2), 9) == ints({0, 1, 1, 3, 5, 11, 21, 43, 85, 171}));
  CHECK(prefix(STParams(3, -2), 8) == ints({0, 1, 3, 7, 15, 31, 63, 127, 255}));
  CHECK(prefix(STParams(-1, 1), 7) == ints({0, 1, -1, 2, -3, 5, -8, 13}));
  CHECK(prefix(STParams(-2, 1), 8) == ints({0, 1, -2, 5, -12, 29, -70, 169, -408}));
  CHECK(prefix(STParams(1, -2), 8) == ints({0, 1, 1, -1, -3, -1, 5, 7, -3}));
  CHECK(fib(STParams(2, 1), 5) == BigRational(29));
  CHECK(fib(STParams(1, 2), 9) == BigRational(171));
  CHECK(fib(STParams(3, -2), 7) == BigRational(127));
  CHECK(fib_fast(STParams(1, 1), 8) == BigRational(21));
  CHECK(fib_fast(STParams(2, 1), 8) == BigRational(408));
  CHECK(fib_binet(STParams(1, 1), 10) == BigRational(55));
  CHECK(fib_binet(STParams(3, -2), 5) == BigRational(31));
}

TEST_CASE("initial values for any parameters") {
  gen::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const STParams p(gen::nonzero_rational(rng), gen::nonzero_rational(rng));
    CHECK(fib(p, 0).is_zero());
    CHECK(fib(p, 1) == BigRational(1));
    CHECK(fib_fast(p, 0).is_zero());
    CHECK(fib_fast(p, 1) == BigRational(1));
    CHECK(fibotorial(p, 0) == BigRational(1));
    if (p.regime() != Regime::NegativeDisc) CHECK(fib_binet(p, 1) == BigRational(1));
  }
}

TEST_CASE("recurrence agrees with an independent oracle") {
  gen::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const STParams p(gen::nonzero_rational(rng), gen::nonzero_rational(rng));
    const auto expected = oracle::fib_list(oracle::q(p.s()), oracle::q(p.t()), 60);
    SeqCache cache(p);
    for (std::size_t n = 0; n <= 60; ++n) {
      CHECK(fib(p, n) == oracle::big(expected[n]));
      CHECK(cache.fib(n) == oracle::big(expected[n]));
    }
  }
}

TEST_CASE("three kernels agree on the positive-discriminant grid") {
  for (const STParams& p : gen::positive_disc_grid()) {
    SeqCache cache(p);
    for (std::size_t n = 0; n <= 500; n += (n < 40 ? 1 : 23)) {
      const BigRational r = cache.fib(n);
      CHECK(fib_fast(p, n) == r);
      CHECK(fib_binet(p, n) == r);
    }
  }
}

TEST_CASE("fast doubling for rational and degenerate parameters") {
  gen::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const STParams p(gen::nonzero_rational(rng), gen::nonzero_rational(rng));
    const std::size_t n = gen::small_int(rng, 0, 150);
    CHECK(fib_fast(p, n) == fib(p, n));
  }
  CHECK(fib_binet(STParams(2, -1), 37) == BigRational(37));
  CHECK(fib_binet(STParams(-4, -4), 3) == BigRational(12));
  const auto [a, b] = fib_fast_pair(1, 1, 90);
  CHECK(a == mpz_class("2880067194370816120"));
  CHECK(b == mpz_class("4660046610375530309"));
  CHECK(code_of([] { fib_binet(STParams(1, -1), 3); }) == Errc::NegativeDiscriminant);
}

TEST_CASE("fibotorials and fibonomials") {
  CHECK(fibotorial(STParams(1, 1), 4) == BigRational(6));
  CHECK(fibotorial(STParams(2, 1), 5) == BigRational(3480));
  CHECK(fibonomial(STParams(1, 1), 4, 2) == BigRational(6));
  CHECK(fibonomial(STParams(2, 1), 3, 1) == BigRational(5));
  CHECK(fibonomial(STParams(2, 1), 7, 0) == BigRational(1));
  CHECK(code_of([] { fibonomial(STParams(1, 1), 3, 4); }) == Errc::IndexOutOfRange);
  // {3}_{1,-1} = 0
  CHECK(code_of([] { fibotorial(STParams(1, -1), 5); }) == Errc::ZeroFactorInFactorial);
  CHECK(fibotorial(STParams(1, -1), 2) == BigRational(1));

  for (const STParams& p : gen::positive_disc_grid()) {
    SeqCache cache(p);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(cache.fibotorial(n) == cache.fibotorial(n - 1) * cache.fib(n));
    CHECK(cache.fibotorial(30) == oracle::big(oracle::fibotorial(oracle::q(p.s()), oracle::q(p.t()), 30)));
  }
}

TEST_CASE("fibonomial symmetry and integrality") {
  gen::Rng rng(24);
  for (int i = 0; i < 12; ++i) {
    const STParams p = gen::positive_disc_params(rng);
    const std::size_t n = gen::small_int(rng, 0, 40);
    const std::size_t k = gen::small_int(rng, 0, static_cast<long>(n));
    CHECK(fibonomial(p, n, k) == fibonomial(p, n, n - k));
    for (std::size_t j = 0; j <= n; ++j) CHECK(fibonomial(p, n, j).is_integer());
  }
}

TEST_CASE("deformation scales the sequence") {
  CHECK(deform_params(STParams(1, 1), -1) == STParams(-1, 1));
  CHECK(fib(deform_params(STParams(1, 1), -1), 4) == BigRational(-3));
  CHECK(fib(deform_params(STParams(2, 1), -1), 3) == BigRational(5));
  CHECK(fib(deform_params(STParams(1, 1), 2), 4) == BigRational(24));
  CHECK(code_of([] { deform_params(STParams(1, 1), 0); }) == Errc::ZeroScale);

  gen::Rng rng(25);
  for (const BigRational a : {BigRational(-1), BigRational(2), BigRational(-3), BigRational(1, 2)}) {
    for (int i = 0; i < 5; ++i) {
      const STParams p(gen::nonzero_rational(rng), gen::nonzero_rational(rng));
      const STParams d = deform_params(p, a);
      SeqCache orig(p), def(d);
      bool zero_seen = false;
      for (std::size_t n = 1; n <= 60; ++n) {
        const auto e = static_cast<std::int64_t>(n);
        CHECK(def.fib(n) == a.pow(e - 1) * orig.fib(n));
        zero_seen = zero_seen || orig.fib(n).is_zero();
        if (n <= 20 && !zero_seen) {
          CHECK(def.fibotorial(n) == a.pow(choose2(e)) * orig.fibotorial(n));
        }
      }
    }
  }
}

TEST_CASE("growth threshold scans") {
  CHECK(lemma_gap_start(STParams(1, 1), 50) == std::optional<std::size_t>(4));
  CHECK(lemma_gap_start(STParams(2, 1), 50) == std::optional<std::size_t>(2));
  // M2 = 3 > M1 + 1 = 2 already holds at n = 1.
  CHECK(lemma_gap_start(STParams(3, -2), 50) == std::optional<std::size_t>(1));
  CHECK(lemma_n_le_fib_start(STParams(1, 1), 50) == std::optional<std::size_t>(5));
  CHECK(lemma_n_le_fib_start(STParams(2, 1), 50) == std::optional<std::size_t>(0));
  CHECK(lemma_n_le_fib_start(STParams(1, 2), 50) == std::optional<std::size_t>(3));
  CHECK(lemma_gap_start(STParams(-1, 1), 50) == lemma_gap_start(STParams(1, 1), 50));
  CHECK(code_of([] { lemma_gap_start(STParams(1, -1), 50); }) == Errc::WrongRegime);
  CHECK(code_of([] { lemma_gap_start(STParams(1, 1), 3); }) == Errc::InvalidArgument);
}

TEST_CASE("absolute value identity for positive discriminant") {
  CHECK(abs_identity_check(STParams(-1, 1), 30));
  CHECK(abs_identity_check(STParams(-2, 1), 30));
  CHECK(abs_identity_check(STParams(1, 1), 30));
  gen::Rng rng(26);
  for (int i = 0; i < 20; ++i) CHECK(abs_identity_check(gen::positive_disc_params(rng), 80));
  CHECK(code_of([] { abs_identity_check(STParams(1, -2), 10); }) == Errc::WrongRegime);
}

TEST_CASE("strict increase of the absolute sequence") {
  gen::Rng rng(27);
  for (int i = 0; i < 25; ++i) {
    const STParams p = gen::positive_disc_params(rng).with_abs_s();
    if (compare(p.phi().abs(), p.phi_prime().abs()) == 0) continue;
    // |s| = 1 repeats the value at n = 1 (F1 = F2).
    const std::size_t start = p.s() == BigRational(1) ? 2 : 1;
    SeqCache cache(p);
    for (std::size_t n = start; n <= 200; ++n) CHECK(cache.fib(n) < cache.fib(n + 1));
  }
}

TEST_CASE("cache growth is monotone and stable") {
  SeqCache cache(STParams(2, 1));
  const BigRational late = cache.fib(50);
  const std::size_t size = cache.size();
  CHECK(cache.fib(10) == BigRational(2378));
  CHECK(cache.size() == size);
  CHECK(cache.fib(50) == late);
}
