#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stfib/enclosure.hpp"
#include "stfib/params.hpp"
#include "stfib/rational.hpp"

namespace stfib {

/// Formal power series c₀ + c₁z + … + c_N z^N over exact rationals, truncated at order N.
class TruncatedSeries {
 public:
  /// Throws EmptySeries for an empty coefficient list.
  explicit TruncatedSeries(std::vector<BigRational> coeffs);

  static TruncatedSeries zero(std::size_t order) {
    return TruncatedSeries(std::vector<BigRational>(order + 1));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const;

  /// Same series truncated to a lower order.
  TruncatedSeries truncate(std::size_t order) const;
  /// f(u·z): c_n ↦ uⁿ·c_n (with 0⁰ = 1).
  TruncatedSeries scale_argument(const BigRational& u) const;

  /// Sums and products truncate to the smaller of the two orders.
  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& f);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string str() const;

 private:
  std::vector<BigRational> coeffs_;
};

/// D_{s,t} on monomials: zⁿ ↦ {n}z^{n−1}. Output order is N−1 (a constant maps to the zero series).
TruncatedSeries st_derivative(const TruncatedSeries& f, const STParams& params);

/// Σ u^{C(n,2)} zⁿ/{n}! up to order N; exactly 1 + z when u = 0.
TruncatedSeries exp_series(const STParams& params, const BigRational& u, std::size_t order);

/// D_{s,t} exp(z,u) = exp(uz,u), checked coefficient by coefficient to order N−1.
bool verify_functional_eq(const STParams& params, const BigRational& u, std::size_t order);

enum class ConvergenceTag { Entire, Disk, OnlyAtZero };
/// E1/E2 name the entire-function sets; D1/D2 the disk cases.
enum class ConvergenceSet { E1, E2, D1, D2 };

struct ConvergenceClass {
  ConvergenceTag tag = ConvergenceTag::OnlyAtZero;
  std::optional<Enclosure> radius;
  std::optional<ConvergenceSet> witness_set;
  /// Whether the series converges at z = 1 (Entire, or a disk of radius > 1), decided exactly.
  bool converges_at_one = false;
};

std::string tag_name(ConvergenceTag tag);
std::string set_name(ConvergenceSet set);

/// Convergence of exp_{s,t}(z,u) for Δ > 0, u > 0. Errors: WrongRegime, UnitModulusQ, InvalidArgument.
ConvergenceClass classify_convergence(const STParams& params, const BigRational& u,
                                      const BigRational& radius_width = pow10_inverse(30));

/// Δ = 0 regime: entire iff u² ≤ −t. Errors: NonNegativeT.
ConvergenceClass classify_zero_disc(const BigRational& t, const BigRational& u);

enum class StarSet { E11, E12, E21, E22, D11, D12, D21, D22, None };
enum class RootChoice { Phi, PhiPrime };

std::string star_set_name(StarSet set);

/// First matching E*₁₁…E*₂₂ set for (params, u); otherwise the D* set when u equals φ (D*₁ₓ)
/// or φ′ (D*₂ₓ) exactly; otherwise None. Errors: WrongRegime.
StarSet star_membership(const STParams& params, const BigRational& u);

/// The D* rectangle that (t, s) lies in for the given root, or None.
StarSet d_star_membership(const STParams& params, RootChoice which);

}  // namespace stfib
