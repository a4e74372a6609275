#include <doctest.h>

#include "stfib/error.hpp"
#include "stfib/euler.hpp"
#include "stfib/sequences.hpp"
#include "stfib/witness.hpp"
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

bool same_report(const WitnessReport& a, const WitnessReport& b) {
  return a.q == b.q && a.depth == b.depth && a.quantity == b.quantity && a.threshold == b.threshold &&
         a.verdict == b.verdict && a.hypothesis_notes == b.hypothesis_notes;
}

}  // namespace

TEST_CASE("direct witness examples") {
  const WitnessReport f6 = witness_direct(STParams(1, 1), 2, 6, 40);
  CHECK(f6.verdict == Verdict::Certified);
  CHECK(f6.threshold == BigRational(3, 4));
  CHECK(f6.hypothesis_notes.empty());

  const WitnessReport f5 = witness_direct(STParams(1, 1), 2, 5, 40);
  CHECK(f5.verdict == Verdict::ThresholdNotBelowOne);
  CHECK(f5.threshold == BigRational(1));

  const WitnessReport p4 = witness_direct(STParams(2, 1), 1, 4, 40);
  CHECK(p4.verdict == Verdict::Certified);
  CHECK(p4.threshold == BigRational(1, 3));
  CHECK(p4.hypothesis_notes.size() == 1);

  CHECK(witness_direct(STParams(3, -2), 2, 5, 40).hypothesis_notes.size() == 1);
}

TEST_CASE("direct witness quantity matches an independent computation") {
  for (const auto& [s, t] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, -2}}) {
    const STParams p(s, t);
    const std::size_t q = 7, depth = 37;
    const WitnessReport r = witness_direct(p, 2, q, depth);
    const mpq_class u(1, 2);
    const mpq_class head = oracle::euler_partial(s, t, u, false, depth) - oracle::euler_partial(s, t, u, false, q);
    const mpq_class factor = oracle::power(2, q * (q + 1) / 2) * oracle::fibotorial(s, t, q) * q;
    CHECK(r.quantity.lo() == oracle::big(head * factor));
    const mpq_class tail = oracle::power(u, depth * (depth + 1) / 2) /
                           (oracle::fibotorial(s, t, depth) * oracle::fib(s, t, depth));
    CHECK(r.quantity.hi() == oracle::big((head + tail) * factor));
    CHECK(r.threshold == oracle::big(mpq_class(q) / oracle::fib(s, t, q)));
  }
}

TEST_CASE("verdict rule") {
  CHECK(decide_verdict(Enclosure(BigRational(1, 10), BigRational(1, 5)), BigRational(1, 2)) == Verdict::Certified);
  CHECK(decide_verdict(Enclosure(BigRational(0), BigRational(1, 5)), BigRational(1, 2)) == Verdict::Inconclusive);
  CHECK(decide_verdict(Enclosure(BigRational(1, 10), BigRational(1, 2)), BigRational(1, 2)) ==
        Verdict::Inconclusive);
  CHECK(decide_verdict(Enclosure(BigRational(1, 10), BigRational(1, 5)), BigRational(1)) ==
        Verdict::ThresholdNotBelowOne);
  CHECK(verdict_name(Verdict::ThresholdNotBelowOne) == "ThresholdNotBelowOne");
}

TEST_CASE("inverse witness examples") {
  const WitnessReport f = witness_inverse(STParams(1, 1), 2, 4, 40);
  CHECK(f.verdict == Verdict::Certified);
  CHECK(f.q == 7);
  CHECK(f.threshold == BigRational(7, 21));
  CHECK(f.depth == 39);
  CHECK(witness_inverse(STParams(2, 1), 1, 3, 40).verdict == Verdict::Certified);
  const WitnessReport tiny = witness_inverse(STParams(1, 1), 2, 1, 40);
  CHECK(tiny.threshold == BigRational(1));
  CHECK(tiny.verdict != Verdict::Certified);
  const WitnessReport decoupled = witness_inverse(STParams(2, 1), 2, 4, 41, 3);
  CHECK(decoupled.q == 3);
  CHECK(decoupled.hypothesis_notes.size() == 1);
  CHECK(code_of([] { witness_inverse(STParams(1, 1), 2, 4, 8); }) == Errc::DepthTooSmall);
  CHECK(code_of([] { witness_inverse(STParams(1, 1), 2, 0, 40); }) == Errc::InvalidArgument);
}

TEST_CASE("scans") {
  const auto f = witness_scan(STParams(1, 1), 2, 1, 30, 60);
  REQUIRE(f.size() == 30);
  for (const auto& r : f) CHECK((r.verdict == Verdict::Certified) == (r.q >= 6));

  const auto p = witness_scan(STParams(2, 1), 2, 1, 30, 60);
  for (const auto& r : p) {
    // q = 2: threshold 2/P2 = 1 is not below one.
    if (r.q >= 3) CHECK(r.verdict == Verdict::Certified);
    if (r.q <= 2) CHECK(r.verdict == Verdict::ThresholdNotBelowOne);
  }
  const auto one = witness_scan(STParams(1, 1), 2, 1, 1, std::nullopt);
  REQUIRE(one.size() == 1);
  CHECK(one[0].verdict == Verdict::ThresholdNotBelowOne);
  CHECK(one[0].depth == 31);

  const ScanSummary sum = summarize(f);
  CHECK(sum.certified == 25);
  CHECK(sum.threshold_not_below_one == 5);
  CHECK(sum.inconclusive == 0);
  CHECK(code_of([] { witness_scan(STParams(1, 1), 2, 3, 2, std::nullopt); }) == Errc::InvalidArgument);
}

TEST_CASE("scan output does not depend on the worker count") {
  const auto a = witness_scan(STParams(1, 2), 3, 1, 24, std::nullopt, 30, 1);
  const auto b = witness_scan(STParams(1, 2), 3, 1, 24, std::nullopt, 30, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].q == i + 1);
    CHECK(same_report(a[i], b[i]));
  }
}

TEST_CASE("certified reports satisfy the inequality chain") {
  gen::Rng rng(51);
  for (int i = 0; i < 15; ++i) {
    const STParams p = gen::witness_params(rng);
    const BigRational big_u(mpz_class(gen::small_int(rng, 3, 9)), mpz_class(gen::small_int(rng, 1, 3)));
    const auto reports = witness_scan(p, big_u, 1, 12, std::nullopt);
    for (const auto& r : reports) {
      if (r.verdict != Verdict::Certified) continue;
      CHECK(r.quantity.lo().sign() > 0);
      CHECK(r.quantity.hi() < r.threshold);
      CHECK(r.threshold < BigRational(1));
    }
  }
}

TEST_CASE("deepening never loses a certificate") {
  gen::Rng rng(52);
  for (int i = 0; i < 10; ++i) {
    const STParams p = gen::witness_params(rng);
    const BigRational big_u(gen::small_int(rng, 1, 4));
    for (std::size_t q = 1; q <= 10; ++q) {
      const WitnessReport shallow = witness_direct(p, big_u, q, q + 10);
      const WitnessReport deep = witness_direct(p, big_u, q, q + 40);
      CHECK(shallow.quantity.contains(deep.quantity));
      if (shallow.verdict == Verdict::Certified) CHECK(deep.verdict == Verdict::Certified);
    }
  }
}

TEST_CASE("witness under deformation") {
  // e_{as,a^2t,1/U} = e_{s,t,1/(aU)}: the series and partial sums coincide, the scale factor
  // picks up a^q and the remainder bound differs by one factor of a.
  for (const auto& [s, t] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, -2}}) {
    const STParams p(s, t);
    for (const long a : {2L, 3L}) {
      const STParams d = deform_params(p, a);
      for (std::size_t q = 2; q <= 12; q += 5) {
        const std::size_t depth = q + 30;
        const WitnessReport on_def = witness_direct(d, 2, q, depth);
        const WitnessReport on_orig = witness_direct(p, BigRational(2 * a), q, depth);
        const BigRational aq = BigRational(a).pow(static_cast<std::int64_t>(q));
        CHECK(on_orig.quantity.lo() == aq * on_def.quantity.lo());
        const BigRational def_tail = on_def.quantity.hi() - on_def.quantity.lo();
        const BigRational orig_tail = on_orig.quantity.hi() - on_orig.quantity.lo();
        CHECK(orig_tail * BigRational(a) == aq * def_tail);
      }
    }
  }
}

TEST_CASE("witness hypotheses") {
  CHECK(code_of([] { witness_direct(STParams(1, 1), 2, 6, 6); }) == Errc::DepthTooSmall);
  CHECK(code_of([] { witness_direct(STParams(1, 1), 2, 0, 6); }) == Errc::InvalidArgument);
  CHECK(code_of([] { witness_direct(STParams(-1, 1), 2, 6, 40); }) == Errc::HypothesisViolated);
  CHECK(code_of([] { witness_direct(STParams(1, -1), 2, 6, 40); }) == Errc::HypothesisViolated);
  CHECK(code_of([] { witness_direct(STParams(BigRational(1, 2), 1), 2, 6, 40); }) == Errc::HypothesisViolated);
  CHECK(code_of([] { witness_direct(STParams(1, 1), BigRational(1, 2), 6, 40); }) == Errc::HypothesisViolated);
}

TEST_CASE("fractional base divisibility data") {
  const DivisibilityReport f = fractional_u_divisibility(STParams(1, 1), BigRational(3, 2), 4);
  CHECK(f.denominator_power == 1024);
  CHECK(f.numerator == 3);
  const mpq_class s4 = oracle::euler_partial(1, 1, mpq_class(2, 3), false, 4);
  const mpq_class product = oracle::power(mpq_class(3, 2), 10) * oracle::fibotorial(1, 1, 4) * 4 * s4;
  CHECK(f.product == oracle::big(product));
  CHECK(f.reduced_denominator == product.get_den());
  CHECK(f.product_is_integer == (product.get_den() == 1));

  CHECK(fractional_u_divisibility(STParams(2, 1), BigRational(5, 3), 3).denominator_power == 729);
  CHECK(code_of([] { fractional_u_divisibility(STParams(1, 1), 2, 4); }) == Errc::IntegerU);
  CHECK(code_of([] { fractional_u_divisibility(STParams(1, 1), BigRational(1, 2), 4); }) ==
        Errc::HypothesisViolated);
}
