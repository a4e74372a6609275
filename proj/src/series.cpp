#include "stfib/series.hpp"

#include <algorithm>

#include "stfib/error.hpp"
#include "stfib/quad.hpp"
#include "stfib/sequences.hpp"

namespace stfib {

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::EmptySeries, "a truncated series needs at least c0");
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw Error(Errc::InvalidArgument, "cannot truncate to a higher order");
  return TruncatedSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::scale_argument(const BigRational& u) const {
  std::vector<BigRational> out;
  out.reserve(coeffs_.size());
  BigRational power(1);
  for (const auto& c : coeffs_) {
    out.push_back(c * power);
    power *= u;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<BigRational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = f.coeffs_[i] + g.coeffs_[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f + BigRational(-1) * g;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<BigRational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& f) {
  std::vector<BigRational> out;
  out.reserve(f.coeffs_.size());
  for (const auto& x : f.coeffs_) out.push_back(c * x);
  return TruncatedSeries(std::move(out));
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ", ";
    out += coeffs_[i].str();
  }
  return "[" + out + "]";
}

TruncatedSeries st_derivative(const TruncatedSeries& f, const STParams& params) {
  if (f.order() == 0) return TruncatedSeries::zero(0);
  SeqCache seq(params);
  std::vector<BigRational> out;
  out.reserve(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) out.push_back(seq.fib(n) * f[n]);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_series(const STParams& params, const BigRational& u, std::size_t order) {
  std::vector<BigRational> out(order + 1);
  if (u.is_zero()) {
    out[0] = BigRational(1);
    if (order >= 1) out[1] = BigRational(1);
    return TruncatedSeries(std::move(out));
  }
  SeqCache seq(params);
  // u^{C(n,2)} built incrementally: u^{C(n+1,2)} = u^{C(n,2)}·uⁿ.
  BigRational u_binom(1);
  BigRational u_pow(1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = u_binom / seq.fibotorial(n);
    u_binom *= u_pow;
    u_pow *= u;
  }
  return TruncatedSeries(std::move(out));
}

bool verify_functional_eq(const STParams& params, const BigRational& u, std::size_t order) {
  if (order < 2) throw Error(Errc::InvalidArgument, "functional equation check needs N >= 2");
  const TruncatedSeries e = exp_series(params, u, order);
  const TruncatedSeries lhs = st_derivative(e, params);
  const TruncatedSeries rhs = e.scale_argument(u).truncate(order - 1);
  return lhs == rhs;
}

std::string tag_name(ConvergenceTag tag) {
  switch (tag) {
    case ConvergenceTag::Entire: return "Entire";
    case ConvergenceTag::Disk: return "Disk";
    case ConvergenceTag::OnlyAtZero: return "OnlyAtZero";
  }
  return "?";
}

std::string set_name(ConvergenceSet set) {
  switch (set) {
    case ConvergenceSet::E1: return "E1";
    case ConvergenceSet::E2: return "E2";
    case ConvergenceSet::D1: return "D1";
    case ConvergenceSet::D2: return "D2";
  }
  return "?";
}

std::string star_set_name(StarSet set) {
  switch (set) {
    case StarSet::E11: return "E*11";
    case StarSet::E12: return "E*12";
    case StarSet::E21: return "E*21";
    case StarSet::E22: return "E*22";
    case StarSet::D11: return "D*11";
    case StarSet::D12: return "D*12";
    case StarSet::D21: return "D*21";
    case StarSet::D22: return "D*22";
    case StarSet::None: return "None";
  }
  return "?";
}

namespace {

void require_positive_disc(const STParams& params, const char* op) {
  if (params.regime() != Regime::PositiveDisc) {
    throw Error(Errc::WrongRegime, std::string(op) + " requires Δ > 0, got " + params.str());
  }
}

// |q| < 1  ⇔  |φ′| < |φ|.
int compare_root_moduli(const STParams& params) {
  return compare(params.phi_prime().abs(), params.phi().abs());
}

// sign(x − k·√m), m ≥ 0, k ≥ 0
int sign_vs_sqrt(const BigRational& x, const BigRational& k, const BigRational& m) {
  return QuadElem(x, -k, m).sign();
}

bool in_e1(const STParams& params, const BigRational& u) {
  return compare_root_moduli(params) < 0 && u.sign() > 0 &&
         compare(QuadElem::rational(u, params.delta()), params.phi().abs()) < 0;
}

bool in_e2(const STParams& params, const BigRational& u) {
  return compare_root_moduli(params) > 0 && u.sign() > 0 &&
         compare(QuadElem::rational(u, params.delta()), params.phi_prime().abs()) < 0;
}

}  // namespace

ConvergenceClass classify_convergence(const STParams& params, const BigRational& u, const BigRational& radius_width) {
  require_positive_disc(params, "classify_convergence");
  if (u.sign() <= 0) throw Error(Errc::InvalidArgument, "classify_convergence needs u > 0, got " + u.str());
  const int moduli = compare_root_moduli(params);
  if (moduli == 0) throw Error(Errc::UnitModulusQ, "|q| = 1 for " + params.str());
  const bool inner = moduli < 0;  // |q| < 1

  const QuadElem major = params.major_root_abs();
  const int c = compare(QuadElem::rational(u, params.delta()), major);
  ConvergenceClass out;
  if (c < 0) {
    out.tag = ConvergenceTag::Entire;
    out.witness_set = inner ? ConvergenceSet::E1 : ConvergenceSet::E2;
    out.converges_at_one = true;
  } else if (c == 0) {
    const QuadElem sqrt_delta = params.sqrt_delta();
    out.tag = ConvergenceTag::Disk;
    out.witness_set = inner ? ConvergenceSet::D1 : ConvergenceSet::D2;
    out.radius = (major / sqrt_delta).enclose(radius_width);
    out.converges_at_one = compare(major, sqrt_delta) > 0;
  } else {
    out.tag = ConvergenceTag::OnlyAtZero;
  }
  return out;
}

ConvergenceClass classify_zero_disc(const BigRational& t, const BigRational& u) {
  if (t.sign() >= 0) throw Error(Errc::NonNegativeT, "Δ = 0 classification needs t < 0, got t=" + t.str());
  ConvergenceClass out;
  if (u * u <= -t) {
    out.tag = ConvergenceTag::Entire;
    out.converges_at_one = true;
  }
  return out;
}

StarSet d_star_membership(const STParams& params, RootChoice which) {
  require_positive_disc(params, "d_star_membership");
  const BigRational& s = params.s();
  const BigRational& t = params.t();
  if (t.sign() >= 0) return StarSet::None;
  const BigRational two(2);
  const BigRational three_halves(mpz_class(3), mpz_class(2));
  const int vs_two_root = sign_vs_sqrt(s.abs(), two, -t);                  // |s| vs 2√(−t)
  const int vs_outer = sign_vs_sqrt(s.abs(), three_halves, BigRational(-2) * t);  // |s| vs 3√(−2t)/2
  if (which == RootChoice::Phi) {
    if (s.sign() > 0 && vs_two_root > 0) return StarSet::D11;
    if (s.sign() < 0 && vs_two_root > 0 && vs_outer < 0) return StarSet::D12;
  } else {
    if (s.sign() > 0 && vs_two_root > 0 && vs_outer < 0) return StarSet::D21;
    if (s.sign() < 0 && vs_two_root > 0) return StarSet::D22;
  }
  return StarSet::None;
}

StarSet star_membership(const STParams& params, const BigRational& u) {
  require_positive_disc(params, "star_membership");
  const BigRational& s = params.s();
  const BigRational& t = params.t();
  const BigRational one(1);
  const BigRational two(2);
  const bool t_ge_m1 = t >= -one;
  // Comparisons against ±2√(−t) only occur in branches with t < −1.
  const auto s_ge_two_root = [&] { return sign_vs_sqrt(s, two, -t) >= 0; };
  const auto s_le_minus_two_root = [&] { return sign_vs_sqrt(-s, two, -t) >= 0; };

  const bool e11 = (t_ge_m1 && s > one - t) || (!t_ge_m1 && s_ge_two_root());
  const bool e12 = !t_ge_m1 && s > t - one && s_le_minus_two_root();
  const bool e21 = !t_ge_m1 && s_ge_two_root() && s < one - t;
  const bool e22 = (t_ge_m1 && s < t - one) || (!t_ge_m1 && s_le_minus_two_root());

  const bool e1 = in_e1(params, u);
  const bool e2 = in_e2(params, u);
  if (e11 && e1) return StarSet::E11;
  if (e12 && e1) return StarSet::E12;
  if (e21 && e2) return StarSet::E21;
  if (e22 && e2) return StarSet::E22;

  const QuadElem uq = QuadElem::rational(u, params.delta());
  if (compare(uq, params.phi()) == 0) return d_star_membership(params, RootChoice::Phi);
  if (compare(uq, params.phi_prime()) == 0) return d_star_membership(params, RootChoice::PhiPrime);
  return StarSet::None;
}

}  // namespace stfib
