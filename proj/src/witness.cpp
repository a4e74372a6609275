#include "stfib/witness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "stfib/error.hpp"
#include "stfib/euler.hpp"
#include "stfib/sequences.hpp"

namespace stfib {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::HypothesisViolated, what);
}

std::vector<std::string> check_witness_hypotheses(const STParams& p, const BigRational& big_u) {
  require(p.is_integral(), "s and t must be integers, got " + p.str());
  require(p.s() >= BigRational(1), "s >= 1 required, got s=" + p.s().str());
  require(p.regime() == Regime::PositiveDisc, "Δ > 0 required, got Δ=" + p.delta().str());
  require(big_u >= BigRational(1), "U >= 1 required, got U=" + big_u.str());
  std::vector<std::string> notes;
  if (big_u == BigRational(1)) {
    notes.emplace_back("U = 1: the irrationality argument assumes U > 1; reported as data only");
  }
  if (p.s().abs() + p.t() <= BigRational(1)) {
    notes.emplace_back("|s| + t <= 1: outside the irrationality hypotheses; the inequality chain is still checked");
  }
  return notes;
}

BigRational scale_factor(const STParams& p, const BigRational& big_u, std::size_t index, std::size_t q,
                         std::int64_t exponent) {
  return big_u.pow(exponent) * fibotorial(p, index) * BigRational(static_cast<std::uint64_t>(q));
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::ThresholdNotBelowOne: return "ThresholdNotBelowOne";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict decide_verdict(const Enclosure& quantity, const BigRational& threshold) {
  if (threshold >= BigRational(1)) return Verdict::ThresholdNotBelowOne;
  if (quantity.lo().sign() > 0 && quantity.hi() < threshold) return Verdict::Certified;
  return Verdict::Inconclusive;
}

WitnessReport witness_direct(const STParams& params, const BigRational& big_u, std::size_t q, std::size_t depth) {
  if (q == 0) throw Error(Errc::InvalidArgument, "q must be >= 1");
  WitnessReport report;
  report.hypothesis_notes = check_witness_hypotheses(params, big_u);
  if (depth <= q) {
    throw Error(Errc::DepthTooSmall, "depth " + std::to_string(depth) + " must exceed q=" + std::to_string(q));
  }
  const EulerSpec spec = EulerSpec::inverse_base(params, big_u, SeriesSign::Plus);
  const auto sums = partial_sums(params, spec.u(), SeriesSign::Plus, depth);
  const BigRational head = sums[depth] - sums[q];
  const BigRational tail = tail_bound_plus(spec, depth);
  const BigRational factor =
      scale_factor(params, big_u, q, q, choose2(static_cast<std::int64_t>(q) + 1));

  report.q = q;
  report.depth = depth;
  report.quantity = Enclosure(head, head + tail) * factor;
  report.threshold = BigRational(static_cast<std::uint64_t>(q)) / fib(params, q);
  report.verdict = decide_verdict(report.quantity, report.threshold);
  return report;
}

WitnessReport witness_inverse(const STParams& params, const BigRational& big_u, std::size_t m, std::size_t depth,
                              std::optional<std::size_t> q) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be >= 1");
  const std::size_t index = 2 * m - 1;
  const std::size_t qv = q.value_or(index);
  if (qv == 0) throw Error(Errc::InvalidArgument, "q must be >= 1");
  WitnessReport report;
  report.hypothesis_notes = check_witness_hypotheses(params, big_u);
  if (qv != index) {
    report.hypothesis_notes.emplace_back("q=" + std::to_string(qv) + " decoupled from the partial-sum index " +
                                         std::to_string(index));
  }
  const std::size_t odd_depth = depth % 2 == 1 ? depth : depth - 1;
  if (depth == 0 || odd_depth <= index) {
    throw Error(Errc::DepthTooSmall, "odd depth " + std::to_string(odd_depth) + " must exceed 2m-1=" +
                                         std::to_string(index));
  }
  const EulerSpec spec = EulerSpec::inverse_base(params, big_u, SeriesSign::Alternating);
  const auto sums = partial_sums(params, spec.u(), SeriesSign::Alternating, odd_depth);
  const BigRational head = sums[odd_depth] - sums[index];
  const BigRational tail = tail_bound_alternating(spec, (odd_depth + 1) / 2);
  const BigRational factor = scale_factor(params, big_u, index, qv, choose2(static_cast<std::int64_t>(index)));

  report.q = qv;
  report.depth = odd_depth;
  report.quantity = Enclosure(head - tail, head + tail).abs() * factor;
  report.threshold = BigRational(static_cast<std::uint64_t>(qv)) / fib(params, 2 * m);
  report.verdict = decide_verdict(report.quantity, report.threshold);
  return report;
}

std::vector<WitnessReport> witness_scan(const STParams& params, const BigRational& big_u, std::size_t q_min,
                                        std::size_t q_max, std::optional<std::size_t> fixed_depth,
                                        std::size_t depth_offset, unsigned threads) {
  if (q_min == 0 || q_max < q_min) {
    throw Error(Errc::InvalidArgument, "scan range must satisfy 1 <= q_min <= q_max");
  }
  const std::size_t count = q_max - q_min + 1;
  std::vector<std::optional<WitnessReport>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::size_t q = q_min + i;
      try {
        slots[i] = witness_direct(params, big_u, q, fixed_depth.value_or(q + depth_offset));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<WitnessReport> reports;
  reports.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    reports.push_back(std::move(*slots[i]));
  }
  return reports;
}

ScanSummary summarize(const std::vector<WitnessReport>& reports) {
  ScanSummary out;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Certified: ++out.certified; break;
      case Verdict::ThresholdNotBelowOne: ++out.threshold_not_below_one; break;
      case Verdict::Inconclusive: ++out.inconclusive; break;
    }
  }
  return out;
}

DivisibilityReport fractional_u_divisibility(const STParams& params, const BigRational& big_u, std::size_t q) {
  if (big_u.is_integer()) throw Error(Errc::IntegerU, "U=" + big_u.str() + " is an integer; use the direct witness");
  require(big_u > BigRational(1), "U > 1 required, got U=" + big_u.str());
  if (q == 0) throw Error(Errc::InvalidArgument, "q must be >= 1");
  const auto exponent = choose2(static_cast<std::int64_t>(q) + 1);
  DivisibilityReport out;
  out.q = q;
  out.big_u = big_u;
  out.numerator = big_u.num();
  out.denominator = big_u.den();
  mpz_pow_ui(out.denominator_power.get_mpz_t(), out.denominator.get_mpz_t(), static_cast<unsigned long>(exponent));
  const BigRational s_q = partial_sums(params, big_u.reciprocal(), SeriesSign::Plus, q).back();
  out.product = scale_factor(params, big_u, q, q, exponent) * s_q;
  out.product_is_integer = out.product.is_integer();
  out.reduced_denominator = out.product.den();
  return out;
}

}  // namespace stfib
