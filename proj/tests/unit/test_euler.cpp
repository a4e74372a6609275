#include <doctest.h>

#include "stfib/error.hpp"
#include "stfib/euler.hpp"
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

BigRational oracle_sum(const STParams& p, const BigRational& base, SeriesSign sign, std::size_t n) {
  return oracle::big(
      oracle::euler_partial(oracle::q(p.s()), oracle::q(p.t()), oracle::q(base), sign == SeriesSign::Alternating, n));
}

const std::vector<STParams> kNamed{STParams(1, 1), STParams(2, 1), STParams(1, 2), STParams(3, -2)};

}  // namespace

TEST_CASE("partial sums") {
  CHECK(partial_sum(EulerSpec(STParams(1, 1), 1, SeriesSign::Plus), 6) == BigRational(889, 240));
  CHECK(partial_sum(EulerSpec(STParams(2, 1), 1, SeriesSign::Plus), 1) == BigRational(2));
  CHECK(partial_sum(EulerSpec(STParams(2, 1), 1, SeriesSign::Alternating), 1) == BigRational(0));
  CHECK(code_of([] { EulerSpec(STParams(1, 1), 0, SeriesSign::Plus); }) == Errc::InvalidArgument);
  CHECK(EulerSpec::inverse_base(STParams(1, 1), 4, SeriesSign::Plus).u() == BigRational(1, 4));

  gen::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const STParams p = gen::positive_disc_params(rng);
    const BigRational base = gen::nonzero_rational(rng, 4, 3);
    const auto sign = i % 2 ? SeriesSign::Plus : SeriesSign::Alternating;
    try {
      const auto sums = partial_sums(p, base, sign, 15);
      for (std::size_t n = 0; n <= 15; n += 5) CHECK(sums[n] == oracle_sum(p, base, sign, n));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ZeroFactorInFactorial);
    }
  }
}

TEST_CASE("remainder bound for the plus series") {
  const auto f1 = EulerSpec::inverse_base(STParams(1, 1), 1, SeriesSign::Plus);
  CHECK(tail_bound_plus(f1, 6) == BigRational(1, 1920));
  const BigRational remainder = partial_sum(f1, 40) - partial_sum(f1, 6);
  CHECK(remainder < BigRational(1, 1920));
  CHECK(remainder > BigRational(335, 1000000));
  const auto p2 = EulerSpec::inverse_base(STParams(2, 1), 2, SeriesSign::Plus);
  CHECK(tail_bound_plus(p2, 5) == BigRational(1, 2).pow(15) / BigRational(3480 * 29));

  CHECK(code_of([] { tail_bound_plus(EulerSpec(STParams(1, 1), 2, SeriesSign::Plus), 6); }) ==
        Errc::HypothesisViolated);
  CHECK(code_of([] { tail_bound_plus(EulerSpec(STParams(BigRational(1, 2), 1), 1, SeriesSign::Plus), 6); }) ==
        Errc::HypothesisViolated);
  CHECK(code_of([] { tail_bound_plus(EulerSpec(STParams(-1, 1), 1, SeriesSign::Plus), 6); }) ==
        Errc::HypothesisViolated);
  CHECK(code_of([] { tail_bound_plus(EulerSpec(STParams(1, 1), 1, SeriesSign::Alternating), 6); }) ==
        Errc::HypothesisViolated);
  // F2 = F1: the gap condition fails at n = 1.
  CHECK(code_of([] { tail_bound_plus(EulerSpec(STParams(1, 1), 1, SeriesSign::Plus), 1); }) ==
        Errc::HypothesisViolated);
}

TEST_CASE("remainder inequality on the named grid") {
  for (const STParams& p : kNamed) {
    for (const BigRational big_u : {BigRational(1), BigRational(2), BigRational(3, 2)}) {
      const auto spec = EulerSpec::inverse_base(p, big_u, SeriesSign::Plus);
      const auto sums = partial_sums(p, spec.u(), SeriesSign::Plus, 50);
      for (std::size_t n = 6; n <= 20; ++n) {
        const BigRational gap = sums[n + 30] - sums[n];
        CHECK(gap.sign() > 0);
        CHECK(gap < tail_bound_plus(spec, n));
        // The deep sum itself stands within its own certified remainder of the limit.
        CHECK(tail_bound_plus(spec, n + 30) < tail_bound_plus(spec, n) - gap);
      }
    }
  }
}

TEST_CASE("alternating remainder bound") {
  CHECK(tail_bound_alternating(EulerSpec(STParams(1, 1), 1, SeriesSign::Alternating), 3) == BigRational(1, 240));
  CHECK(tail_bound_alternating(EulerSpec(STParams(2, 1), 1, SeriesSign::Alternating), 3) == BigRational(1, 243600));
  CHECK(tail_bound_alternating(EulerSpec(STParams(2, -1), 1, SeriesSign::Alternating), 2) == BigRational(1, 24));
  CHECK(code_of([] { tail_bound_alternating(EulerSpec(STParams(1, 1), 1, SeriesSign::Plus), 3); }) ==
        Errc::HypothesisViolated);

  for (const STParams& p : kNamed) {
    const auto spec = EulerSpec::inverse_base(p, 2, SeriesSign::Alternating);
    const auto sums = partial_sums(p, spec.u(), SeriesSign::Alternating, 61);
    for (std::size_t m = 1; m <= 10; ++m) {
      const BigRational r = (sums[61] - sums[2 * m - 1]).abs();
      CHECK(r <= tail_bound_alternating(spec, m));
    }
  }
}

TEST_CASE("alternating partial sums bracket later ones") {
  for (const STParams& p : kNamed) {
    const auto sums = partial_sums(p, BigRational(1, 2), SeriesSign::Alternating, 40);
    for (std::size_t m = 1; 2 * m + 2 <= 40; ++m) {
      CHECK(sums[2 * m] >= sums[2 * m + 2]);
      CHECK(sums[2 * m + 1] >= sums[2 * m - 1]);
      CHECK(sums[2 * m + 2] >= sums[2 * m + 1]);
    }
  }
}

TEST_CASE("certified enclosures") {
  const Enclosure p = enclosure(EulerSpec(STParams(2, 1), 1, SeriesSign::Plus), pow10_inverse(12));
  CHECK(p.width() <= pow10_inverse(12));
  CHECK(p.contains(BigRational::parse_decimal("2.6086248190955")));
  const Enclosure f = enclosure(EulerSpec(STParams(1, 1), 1, SeriesSign::Plus), pow10_inverse(12));
  CHECK(f.contains(BigRational::parse_decimal("3.70450289915406")));
  const Enclosure e = enclosure(EulerSpec(STParams(2, -1), 1, SeriesSign::Plus), pow10_inverse(20));
  CHECK(e.contains(BigRational::parse_decimal("2.718281828459045235360")));
  CHECK(e.width() <= pow10_inverse(20));

  CHECK(code_of([] { enclosure(EulerSpec(STParams(1, -1), 1, SeriesSign::Plus), pow10_inverse(5)); }) ==
        Errc::WrongRegime);
  CHECK(code_of([] { enclosure(EulerSpec(STParams(2, 1), 3, SeriesSign::Plus), pow10_inverse(5)); }) ==
        Errc::NotConvergentAtOne);
  CHECK(code_of([] { enclosure(EulerSpec(STParams(2, -1), 2, SeriesSign::Plus), pow10_inverse(5)); }) ==
        Errc::NotConvergentAtOne);
}

TEST_CASE("enclosures contain deep partial sums and are monotone in width") {
  gen::Rng rng(42);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 25; ++i) {
    const STParams p = gen::positive_disc_params(rng, 5);
    if (compare(p.phi().abs(), p.phi_prime().abs()) == 0) continue;
    const BigRational u(mpz_class(gen::small_int(rng, 1, 6)), mpz_class(gen::small_int(rng, 1, 4)));
    if (!classify_convergence(p, u).converges_at_one || classify_convergence(p, u).tag != ConvergenceTag::Entire) {
      continue;
    }
    const auto sign = i % 2 ? SeriesSign::Plus : SeriesSign::Alternating;
    try {
      const Enclosure coarse = enclosure(EulerSpec(p, u, sign), pow10_inverse(6));
      const Enclosure fine = enclosure(EulerSpec(p, u, sign), pow10_inverse(25));
      CHECK(fine.width() <= pow10_inverse(25));
      CHECK(coarse.width() <= pow10_inverse(6));
      // Both enclose the same real number.
      CHECK(fine.lo() <= coarse.hi());
      CHECK(coarse.lo() <= fine.hi());
      const auto sums = partial_sums(p, u, sign, 150);
      CHECK(fine.contains(sums[150]));
      ++checked;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ZeroFactorInFactorial);
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("positive-term enclosures hold every later partial sum") {
  for (const STParams& p : kNamed) {
    const auto spec = EulerSpec(p, 1, SeriesSign::Plus);
    const Enclosure e = enclosure(spec, pow10_inverse(30));
    CHECK(e.width() <= pow10_inverse(30));
    const auto sums = partial_sums(p, 1, SeriesSign::Plus, 80);
    for (std::size_t n = 1; n <= 80; ++n) CHECK(sums[n] > sums[n - 1]);
    CHECK(e.contains(sums[80]));
    CHECK(e.hi() > sums[80]);
  }
}

TEST_CASE("order-6 estimate") {
  const auto f = order6_estimate_bounds(STParams(1, 1));
  CHECK(f.lower == BigRational(889, 240));
  CHECK(render_decimal(f.lower, 5, DecimalRounding::Truncate) == "3.70416");
  CHECK(render_decimal(f.upper, 5, DecimalRounding::Truncate) == "3.70418");
  for (const STParams& p : kNamed) {
    const auto b = order6_estimate_bounds(p);
    CHECK(b.lower == partial_sum(EulerSpec(p, 1, SeriesSign::Plus), 6));
    SeqCache seq(p);
    CHECK(b.upper - b.lower == (seq.fibotorial(7) * (seq.fib(8) - BigRational(1))).reciprocal());
  }
  CHECK(code_of([] { order6_estimate_bounds(STParams(-1, 1)); }) == Errc::HypothesisViolated);
  CHECK(code_of([] { order6_estimate_bounds(STParams(1, -1)); }) == Errc::HypothesisViolated);
}

TEST_CASE("phi-deformed sums") {
  const PhiEulerResult m = phi_euler_enclosure({STParams(3, -2), RootChoice::Phi, SeriesSign::Plus}, 3,
                                               pow10_inverse(20));
  CHECK(m.partial_sum == QuadElem::rational(BigRational(64, 21), 1));
  CHECK(m.star_set == StarSet::D11);
  CHECK(m.value.lo() >= BigRational(64, 21));

  const PhiEulerResult r = phi_euler_enclosure({STParams(5, -2), RootChoice::Phi, SeriesSign::Plus}, 2,
                                               pow10_inverse(30));
  CHECK(r.partial_sum == QuadElem(BigRational(5, 2), BigRational(1, 10), 17));
  // At the major root the terms shrink only geometrically (ratio near √Δ/φ).
  const PhiEulerResult deep = phi_euler_enclosure({STParams(5, -2), RootChoice::Phi, SeriesSign::Plus}, 300,
                                                  pow10_inverse(40));
  CHECK(r.value.contains(deep.value));
  CHECK(deep.value.width() < pow10_inverse(10));
  CHECK(deep.value.lo() == deep.partial_sum.enclose_with(sqrt_enclosure(17, pow10_inverse(40))).lo());

  const PhiEulerResult zero = phi_euler_enclosure({STParams(3, -2), RootChoice::Phi, SeriesSign::Plus}, 0,
                                                  pow10_inverse(20));
  CHECK(zero.value.contains(BigRational(1)));

  CHECK(code_of([] {
          phi_euler_enclosure({STParams(1, 1), RootChoice::Phi, SeriesSign::Plus}, 3, pow10_inverse(5));
        }) == Errc::NotInStarSet);
  CHECK(code_of([] {
          phi_euler_enclosure({STParams(1, -1), RootChoice::Phi, SeriesSign::Plus}, 3, pow10_inverse(5));
        }) == Errc::WrongRegime);
}

TEST_CASE("scaling identity") {
  CHECK(scaling_identity_check(STParams(1, 1), 2, 3, 12));
  CHECK(scaling_identity_check(STParams(2, 1), -1, 2, 12));
  CHECK(scaling_identity_check(STParams(1, 2), 1, 5, 12));
  gen::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const STParams p = gen::positive_disc_params(rng);
    const BigRational a = gen::nonzero_rational(rng, 3, 2);
    const BigRational u = gen::nonzero_rational(rng, 3, 2);
    try {
      CHECK(scaling_identity_check(p, a, u, 15));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ZeroFactorInFactorial);
    }
  }
}
