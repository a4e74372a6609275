#include "stfib/degenerate.hpp"

#include <cfloat>
#include <cmath>

#include "stfib/error.hpp"
#include "stfib/sequences.hpp"

namespace stfib {

namespace {

void require_negative_t(const BigRational& t) {
  if (t.sign() >= 0) throw Error(Errc::NonNegativeT, "degenerate closed forms need t < 0, got t=" + t.str());
}

BigRational factorial(std::uint64_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f);
}

BigRational binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return BigRational(c);
}

// Converts exactly when possible; reports whether the long double is exact.
long double to_long_double(const BigRational& x, bool& exact) {
  const double d = x.to_double();
  exact = BigRational::from_double(d) == x;
  return static_cast<long double>(d);
}

void require_negative_disc(const STParams& params) {
  if (params.regime() != Regime::NegativeDisc) {
    throw Error(Errc::WrongRegime, "polar closed form requires Δ < 0, got " + params.str());
  }
}

}  // namespace

QuadElem ZeroDiscValue::value() const {
  const BigRational radicand = -t;
  const BigRational half_power = radicand.pow(root_power / 2);
  BigRational c = coefficient * half_power;
  if (branch == RootBranch::Plus && (root_power % 2 != 0)) c = -c;
  if (root_power % 2 == 0) return QuadElem::rational(c, radicand);
  return QuadElem(BigRational(0), c, radicand);
}

BigRational ZeroDiscValue::rational_value() const {
  const QuadElem v = value();
  if (!v.is_rational()) throw Error(Errc::WrongRegime, "value " + v.str() + " is irrational");
  return v.rational_part();
}

std::optional<BigRational> zero_disc_s(const BigRational& t, RootBranch branch) {
  require_negative_t(t);
  BigRational root;
  if (!(-t).is_perfect_square(&root)) return std::nullopt;
  const BigRational s = BigRational(2) * root;
  return branch == RootBranch::Plus ? -s : s;
}

ZeroDiscValue fib_zero_disc(const BigRational& t, RootBranch branch, std::uint64_t n) {
  require_negative_t(t);
  if (n == 0) return {BigRational(0), 0, t, branch};
  return {BigRational(n), static_cast<std::int64_t>(n - 1), t, branch};
}

ZeroDiscValue factorial_zero_disc(const BigRational& t, RootBranch branch, std::uint64_t n) {
  require_negative_t(t);
  return {factorial(n), choose2(static_cast<std::int64_t>(n)), t, branch};
}

ZeroDiscValue fibonomial_zero_disc(const BigRational& t, RootBranch branch, std::uint64_t n, std::uint64_t k) {
  require_negative_t(t);
  if (k > n) {
    throw Error(Errc::IndexOutOfRange, "fibonomial needs k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return {binomial(n, k), static_cast<std::int64_t>(k * (n - k)), t, branch};
}

NegDiscValue fib_neg_disc(const STParams& params, std::uint64_t n) {
  require_negative_disc(params);
  if (n == 0) return {0.0, 0.0};
  if (n == 1) return {1.0, 0.0};

  bool s_exact = false;
  bool t_exact = false;
  bool d_exact = false;
  const long double s = to_long_double(params.s(), s_exact);
  const long double t = to_long_double(params.t(), t_exact);
  const long double neg_delta = to_long_double(-params.delta(), d_exact);

  const long double r = std::sqrt(-t);
  const long double theta = std::atan2(std::sqrt(neg_delta), s);
  const long double sin_theta = std::sin(theta);
  const auto nl = static_cast<long double>(n);
  const long double envelope = std::pow(r, nl - 1) / std::fabs(sin_theta);
  const long double value = std::pow(r, nl - 1) * std::sin(nl * theta) / sin_theta;

  // Working-precision roundoff grows with the argument nθ of the sine and with the power.
  const long double u_work = LDBL_EPSILON / 2;
  const long double u_input = (s_exact && t_exact && d_exact) ? 0.0L : DBL_EPSILON / 2;
  const long double rel_work = (4 * nl + 16) * u_work * (1 + nl * std::fabs(theta));
  const long double rel_input = 4 * nl * (nl + 1) * u_input * (1 + std::fabs(theta));
  const long double err = 8 * envelope * (rel_work + rel_input);

  const double rounded = static_cast<double>(value);
  const long double rounding = std::fabs(static_cast<long double>(rounded) - value);
  return {rounded, static_cast<double>((err + rounding) * (1 + 1e-12L))};
}

NegDiscValue factorial_neg_disc(const STParams& params, std::uint64_t n) {
  require_negative_disc(params);
  SeqCache exact(params);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (exact.fib(k).is_zero()) {
      throw Error(Errc::ZeroFactorInFactorial,
                  "sin(kθ) = 0 at k=" + std::to_string(k) + " for " + params.str());
    }
  }
  long double product = 1;
  long double envelope = 1;  // ∏ (|v_k| + e_k)
  long double magnitude = 1; // ∏ |v_k|
  for (std::uint64_t k = 1; k <= n; ++k) {
    const NegDiscValue term = fib_neg_disc(params, k);
    product *= term.value;
    envelope *= std::fabs(static_cast<long double>(term.value)) + term.error_bound;
    magnitude *= std::fabs(static_cast<long double>(term.value));
  }
  const auto nl = static_cast<long double>(n);
  const long double u_work = LDBL_EPSILON / 2;
  const long double err = (envelope - magnitude) + 4 * (nl + 1) * u_work * envelope;
  const double rounded = static_cast<double>(product);
  const long double rounding = std::fabs(static_cast<long double>(rounded) - product);
  return {rounded, static_cast<double>((err + rounding) * (1 + 1e-12L))};
}

}  // namespace stfib
