#include "stfib/euler.hpp"

#include <optional>

#include "stfib/error.hpp"
#include "stfib/sequences.hpp"

namespace stfib {

namespace {

constexpr std::size_t kMaxTerms = 100000;
constexpr std::size_t kMaxTailSteps = 20000;
constexpr std::size_t kDecreaseWindow = 64;

BigRational sign_factor(SeriesSign sign, std::size_t k) {
  return (sign == SeriesSign::Alternating && (k % 2 == 1)) ? BigRational(-1) : BigRational(1);
}

void hypothesis(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::HypothesisViolated, what);
}

/**
 * Bounds the term ratio |term_{k+1}/term_k| = |base|^k / |{k+1}| uniformly for k ≥ k0.
 *
 * Δ > 0: |{k+1}| ≥ φ_M^{k+1}(1 − |q|^{k+1})/√Δ with φ_M the root of larger modulus, so the
 * ratio is at most (√Δ/φ_M)·(|base|/φ_M)^k/(1 − |q|^{k+1}), non-increasing in k when
 * |base| ≤ φ_M. Δ = 0: the ratio is (|base|/|ρ|)^k/(k+1) with ρ = s/2.
 */
class GrowthModel {
 public:
  // `base_abs` encloses |base|; `base_is_major` says |base| equals φ_M exactly.
  GrowthModel(const STParams& params, Enclosure base_abs, bool base_is_major)
      : params_(params), base_abs_(std::move(base_abs)), base_is_major_(base_is_major) {
    if (params.regime() == Regime::PositiveDisc) {
      const Enclosure root = sqrt_enclosure(params.delta(), pow10_inverse(60));
      const BigRational half(mpz_class(1), mpz_class(2));
      const Enclosure s_abs = Enclosure::point(params.s().abs());
      const Enclosure major = (s_abs + root) * half;
      const Enclosure minor = ((s_abs - root) * half).abs();
      lead_hi_ = root.hi() / major.lo();
      q_hi_ = minor.hi() / major.lo();
      base_ratio_hi_ = base_is_major_ ? BigRational(1) : std::min(BigRational(1), base_abs_.hi() / major.lo());
    } else {
      const BigRational rho_abs = (params.s() / BigRational(2)).abs();
      lead_hi_ = BigRational(1);
      q_hi_ = BigRational(0);
      base_ratio_hi_ = base_abs_.hi() / rho_abs;
    }
  }

  std::optional<BigRational> ratio_bound(std::size_t k0) const {
    const auto k = static_cast<std::int64_t>(k0);
    if (params_.regime() == Regime::ZeroDisc) {
      return base_ratio_hi_.pow(k) / BigRational(k + 1);
    }
    const BigRational denom = BigRational(1) - q_hi_.pow(k + 1);
    if (denom.sign() <= 0) return std::nullopt;
    return lead_hi_ * base_ratio_hi_.pow(k) / denom;
  }

  const Enclosure& base_abs() const { return base_abs_; }

 private:
  STParams params_;
  Enclosure base_abs_;
  bool base_is_major_;
  BigRational lead_hi_;
  BigRational q_hi_;
  BigRational base_ratio_hi_;
};

// Upper bound on |term_k| = |base|^{C(k,2)}/|{k}!|.
BigRational term_magnitude_hi(const GrowthModel& model, SeqCache& seq, std::size_t k) {
  return model.base_abs().hi().pow(choose2(static_cast<std::int64_t>(k))) / seq.fibotorial(k).abs();
}

// Certified upper bound on Σ_{k>n} |term_k|.
BigRational tail_upper(const GrowthModel& model, SeqCache& seq, std::size_t n) {
  BigRational explicit_part(0);
  for (std::size_t k0 = n + 1; k0 <= n + kMaxTailSteps; ++k0) {
    const auto rho = model.ratio_bound(k0);
    if (rho && *rho < BigRational(1)) {
      return explicit_part + term_magnitude_hi(model, seq, k0) / (BigRational(1) - *rho);
    }
    explicit_part += term_magnitude_hi(model, seq, k0);
  }
  throw Error(Errc::NonConvergentTail, "no geometric domination found for " + seq.params().str());
}

// Endpoints rounded outward to a 2^-k grid with 2^-k ≤ width/8: adds at most width/4.
Enclosure snap_outward(const Enclosure& e, const BigRational& width) {
  mpz_class grid(1);
  const BigRational target = BigRational(8) / width;
  while (BigRational(grid) < target) grid *= 2;
  const BigRational g(grid);
  return Enclosure(BigRational((e.lo() * g).floor()) / g, BigRational((e.hi() * g).ceil()) / g);
}

bool all_terms_positive(const STParams& params) {
  return params.s().sign() > 0 && params.regime() != Regime::NegativeDisc;
}

}  // namespace

EulerSpec::EulerSpec(STParams params, BigRational u, SeriesSign sign)
    : params_(std::move(params)), u_(std::move(u)), sign_(sign) {
  if (u_.sign() <= 0) throw Error(Errc::InvalidArgument, "deformation base u must be > 0, got " + u_.str());
}

EulerSpec EulerSpec::inverse_base(STParams params, const BigRational& big_u, SeriesSign sign) {
  if (big_u.sign() <= 0) throw Error(Errc::InvalidArgument, "U must be > 0, got " + big_u.str());
  return EulerSpec(std::move(params), big_u.reciprocal(), sign);
}

std::vector<BigRational> partial_sums(const STParams& params, const BigRational& base, SeriesSign sign,
                                      std::size_t n) {
  SeqCache seq(params);
  std::vector<BigRational> sums;
  sums.reserve(n + 1);
  BigRational acc(0);
  BigRational base_binom(1);  // base^{C(k,2)}
  BigRational base_pow(1);    // base^k
  for (std::size_t k = 0; k <= n; ++k) {
    acc += sign_factor(sign, k) * base_binom / seq.fibotorial(k);
    sums.push_back(acc);
    base_binom *= base_pow;
    base_pow *= base;
  }
  return sums;
}

BigRational partial_sum(const EulerSpec& spec, std::size_t n) {
  return partial_sums(spec.params(), spec.u(), spec.sign(), n).back();
}

BigRational tail_bound_plus(const EulerSpec& spec, std::size_t n) {
  const STParams& p = spec.params();
  hypothesis(spec.sign() == SeriesSign::Plus, "the remainder bound applies to the plus-sign series");
  hypothesis(p.is_integral(), "s and t must be integers, got " + p.str());
  hypothesis(p.s() >= BigRational(1), "s >= 1 required, got s=" + p.s().str());
  hypothesis(p.regime() == Regime::PositiveDisc, "Δ > 0 required, got Δ=" + p.delta().str());
  hypothesis(spec.u() <= BigRational(1), "U >= 1 required (series base u = 1/U <= 1), got u=" + spec.u().str());
  hypothesis(n >= 1, "n >= 1 required");
  SeqCache seq(p);
  // With integer s ≥ 1 and Δ > 0, {k} is positive and strictly increasing from k = 2 on, so the
  // tail past n is dominated by a geometric series of ratio 1/{n+1}; {n+1} − 1 ≥ {n} finishes it.
  hypothesis(seq.fib(n + 1) >= seq.fib(n) + BigRational(1),
             "{n+1} >= {n} + 1 fails at n=" + std::to_string(n) + " for " + p.str());
  const auto e = choose2(static_cast<std::int64_t>(n + 1));
  return spec.u().pow(e) / (seq.fibotorial(n) * seq.fib(n));
}

BigRational tail_bound_alternating(const EulerSpec& spec, std::size_t m) {
  const STParams& p = spec.params();
  hypothesis(spec.sign() == SeriesSign::Alternating, "the alternating remainder bound needs the alternating series");
  hypothesis(m >= 1, "m >= 1 required");
  hypothesis(p.is_integral(), "s and t must be integers, got " + p.str());
  hypothesis(p.s() >= BigRational(1), "s >= 1 required, got s=" + p.s().str());
  hypothesis(p.regime() != Regime::NegativeDisc, "Δ >= 0 required, got Δ=" + p.delta().str());
  hypothesis(spec.u() <= BigRational(1), "U >= 1 required (series base u = 1/U <= 1), got u=" + spec.u().str());
  SeqCache seq(p);
  const std::size_t first = 2 * m;
  BigRational u_pow = spec.u().pow(static_cast<std::int64_t>(first));
  for (std::size_t k = first; k < first + kDecreaseWindow; ++k) {
    // |term_{k+1}/term_k| = u^k/{k+1}
    hypothesis(u_pow <= seq.fib(k + 1), "term magnitudes increase at k=" + std::to_string(k));
    u_pow *= spec.u();
  }
  return spec.u().pow(choose2(static_cast<std::int64_t>(first))) / seq.fibotorial(first);
}

Enclosure enclosure(const EulerSpec& spec, const BigRational& target_width) {
  const STParams& p = spec.params();
  if (target_width.sign() <= 0) throw Error(Errc::InvalidArgument, "target width must be positive");
  switch (p.regime()) {
    case Regime::NegativeDisc:
      throw Error(Errc::WrongRegime, "certified enclosures need Δ >= 0, got " + p.str());
    case Regime::ZeroDisc:
      if (!classify_zero_disc(p.t(), spec.u()).converges_at_one) {
        throw Error(Errc::NotConvergentAtOne, "u^2 > -t for " + p.str());
      }
      break;
    case Regime::PositiveDisc: {
      const ConvergenceClass cls = classify_convergence(p, spec.u());
      if (!cls.converges_at_one) {
        throw Error(Errc::NotConvergentAtOne, tag_name(cls.tag) + " for " + p.str() + " u=" + spec.u().str());
      }
      break;
    }
  }

  bool base_is_major = false;
  if (p.regime() == Regime::PositiveDisc) {
    base_is_major = compare(QuadElem::rational(spec.u(), p.delta()), p.major_root_abs()) == 0;
  }
  const GrowthModel model(p, Enclosure::point(spec.u()), base_is_major);
  const bool one_sided = spec.sign() == SeriesSign::Plus && all_terms_positive(p);

  SeqCache seq(p);
  BigRational sum(0);
  BigRational u_binom(1);
  BigRational u_pow(1);
  const BigRational quarter_width = target_width / BigRational(4);
  for (std::size_t n = 0; n < kMaxTerms; ++n) {
    sum += sign_factor(spec.sign(), n) * u_binom / seq.fibotorial(n);
    u_binom *= u_pow;
    u_pow *= spec.u();
    // u_binom now holds u^{C(n+1,2)}: skip the tail bound until the next term is small.
    const BigRational next = u_binom / seq.fibotorial(n + 1).abs();
    if (next > quarter_width) continue;
    const BigRational tail = tail_upper(model, seq, n);
    if (one_sided && BigRational(2) * tail <= target_width) return snap_outward(Enclosure(sum, sum + tail), target_width);
    if (!one_sided && BigRational(4) * tail <= target_width) {
      return snap_outward(Enclosure(sum - tail, sum + tail), target_width);
    }
  }
  throw Error(Errc::WidthUnreachable, "width " + target_width.str() + " not reached in " +
                                          std::to_string(kMaxTerms) + " terms");
}

EstimateBounds order6_estimate_bounds(const STParams& p) {
  hypothesis(p.regime() == Regime::PositiveDisc, "Δ > 0 required, got " + p.str());
  hypothesis(compare(p.phi(), QuadElem::rational(BigRational(1), p.delta())) > 0, "φ > 1 required for " + p.str());
  SeqCache seq(p);
  for (std::size_t k = 1; k <= 8; ++k) {
    hypothesis(!seq.fib(k).is_zero(), "{" + std::to_string(k) + "} = 0 for " + p.str());
  }
  const BigRational one(1);
  BigRational h(0);
  for (std::size_t k = 3; k <= 6; ++k) h += one / seq.fibotorial(k);
  const BigRational lower = BigRational(2) + one / p.s() + h;
  const BigRational gap = seq.fib(8) - one;
  hypothesis(!gap.is_zero(), "{8} = 1 for " + p.str());
  return {lower, lower + one / (seq.fibotorial(7) * gap)};
}

PhiEulerResult phi_euler_enclosure(const PhiEulerSpec& spec, std::size_t n, const BigRational& sqrt_width) {
  const STParams& p = spec.params;
  if (p.regime() != Regime::PositiveDisc) {
    throw Error(Errc::WrongRegime, "φ-deformed sums need Δ > 0, got " + p.str());
  }
  const StarSet set = d_star_membership(p, spec.which);
  if (set == StarSet::None) {
    throw Error(Errc::NotInStarSet, p.str() + " lies in no D* set for " +
                                        (spec.which == RootChoice::Phi ? "phi" : "phi-prime"));
  }
  const QuadElem base = spec.which == RootChoice::Phi ? p.phi() : p.phi_prime();
  const BigRational& radicand = p.delta();

  SeqCache seq(p);
  QuadElem sum = QuadElem::rational(BigRational(0), radicand);
  QuadElem base_binom = QuadElem::rational(BigRational(1), radicand);
  QuadElem base_pow = QuadElem::rational(BigRational(1), radicand);
  for (std::size_t k = 0; k <= n; ++k) {
    sum += base_binom * (sign_factor(spec.sign, k) / seq.fibotorial(k));
    base_binom *= base_pow;
    base_pow *= base;
  }

  const Enclosure root = sqrt_enclosure(radicand, sqrt_width);
  const bool base_is_major = compare(base.abs(), p.major_root_abs()) == 0;
  const Enclosure base_abs = base.abs().enclose(pow10_inverse(60));
  const GrowthModel model(p, base_abs, base_is_major);
  const BigRational tail = tail_upper(model, seq, n);
  const Enclosure partial = sum.enclose_with(root);
  const bool positive_terms = spec.sign == SeriesSign::Plus && p.s().sign() > 0 && base.sign() > 0;
  return {sum, Enclosure(positive_terms ? partial.lo() : partial.lo() - tail, partial.hi() + tail), set};
}

bool scaling_identity_check(const STParams& params, const BigRational& a, const BigRational& u, std::size_t n) {
  if (u.is_zero()) throw Error(Errc::InvalidArgument, "u must be nonzero");
  const STParams deformed = deform_params(params, a);
  for (const SeriesSign sign : {SeriesSign::Plus, SeriesSign::Alternating}) {
    const auto lhs = partial_sums(deformed, u.reciprocal(), sign, n);
    const auto rhs = partial_sums(params, (a * u).reciprocal(), sign, n);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace stfib
