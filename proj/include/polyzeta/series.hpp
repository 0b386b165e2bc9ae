#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polyzeta/rational.hpp"

namespace polyzeta {

/// Exponent tuple (m_1, ..., m_r) of a monomial t_1^{m_1} ... t_r^{m_r}.
using Exponent = std::vector<int>;

/// Per-variable degree window (N_1, ..., N_r). A series with this profile
/// stores exactly the monomials with m_j <= N_j for every j.
class TruncationProfile {
 public:
  TruncationProfile() = default;
  explicit TruncationProfile(std::vector<int> orders);
  static TruncationProfile uniform(std::size_t variables, int order);

  std::size_t variables() const { return orders_.size(); }
  const std::vector<int>& orders() const { return orders_; }
  int order(std::size_t j) const { return orders_.at(j); }
  int total_degree() const;

  bool contains(const Exponent& e) const;
  TruncationProfile min(const TruncationProfile& other) const;

  friend bool operator==(const TruncationProfile&, const TruncationProfile&) = default;

 private:
  std::vector<int> orders_;
};

/// Multivariate formal power series over exact rationals, truncated by a
/// per-variable profile. Values are immutable once built by the free
/// functions below; binary operations truncate to the component-wise
/// minimum of the operand profiles.
class TruncatedSeries {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit TruncatedSeries(TruncationProfile profile);

  static TruncatedSeries constant(const Rational& c, TruncationProfile profile);
  /// c * t_1^{e_1} ... t_r^{e_r}; dropped if outside the profile.
  static TruncatedSeries monomial(const Rational& c, const Exponent& e,
                                  TruncationProfile profile);

  const TruncationProfile& profile() const { return profile_; }
  std::size_t variables() const { return profile_.variables(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Raw Taylor coefficient. Asking outside the window is an error, never 0.
  Rational coeff(const Exponent& e) const;
  Rational constant_term() const;
  /// Minimum total degree of a nonzero term (-1 for the zero series).
  int valuation() const;

  /// Adds c to the coefficient of e (ignored outside the profile).
  void add_term(const Exponent& e, const Rational& c);

  TruncatedSeries truncated(const TruncationProfile& profile) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
  TruncatedSeries operator-() const;

  /// Coefficient-wise equality on the common window.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  TruncationProfile profile_;
  Terms terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(c * (t_j + t_{j+1} + ... + t_r)); j is 1-based.
TruncatedSeries exp_linear(long c, std::size_t j, const TruncationProfile& profile);

/// Multiplicative inverse within the profile. Throws NonInvertible when the
/// constant term vanishes.
TruncatedSeries series_inverse(const TruncatedSeries& a);

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned n);

/// Free-function spelling of TruncatedSeries::coeff.
Rational coeff(const TruncatedSeries& a, const Exponent& e);

}  // namespace polyzeta
