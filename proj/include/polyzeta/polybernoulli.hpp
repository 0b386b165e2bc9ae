#pragma once

#include <vector>

#include "polyzeta/permutation.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/series.hpp"

namespace polyzeta {

/// Index data of the permuted, offset poly-Bernoulli numbers
/// B_m^{(k)}(σ; a; b). The generating function is
///   ∏_j e^{(a_j-1)T_j} · Li^ш_k(z_{σ(1)},...,z_{σ(r)}; b) / ∏_j z_{σ(j)}^{b_j}
/// with T_i = t_i + ... + t_r and z_i = 1 - e^{-T_i}.
struct BernoulliSpec {
  std::vector<int> k;
  Permutation sigma;
  std::vector<int> a;
  std::vector<int> b;

  std::size_t depth() const { return k.size(); }
  /// Throws InvalidSpec unless a_1, a_{σ⁻¹(1)}, b_1, b_{σ⁻¹(1)} >= 1,
  /// a_{σ(j)} + b_j >= 1 and all offsets are non-negative.
  void validate() const;
  bool is_valid() const;

  friend bool operator==(const BernoulliSpec&, const BernoulliSpec&) = default;
  friend auto operator<=>(const BernoulliSpec&, const BernoulliSpec&) = default;
};

/// Σ_{l_j >= b_j} args_1^{l_1} ⋯ args_r^{l_r} / (l_1^{u_1} (l_1+l_2)^{u_2} ⋯),
/// formally substituted. Every argument must have zero constant term and
/// b_1 >= 1. The l-sum stops once the valuation exceeds the window.
TruncatedSeries li_sha_series(const std::vector<int>& u, const std::vector<int>& b,
                              const std::vector<TruncatedSeries>& args,
                              const TruncationProfile& profile);

/// Generating series of B^{(k)}(σ;a;b) in raw Taylor coefficients. Results are
/// cached per spec; the cache keeps the widest window requested so far.
TruncatedSeries bernoulli_series(const BernoulliSpec& spec, const TruncationProfile& profile);

/// B_m^{(k)}(σ;a;b) = m_1!⋯m_r! × Taylor coefficient.
Rational bnum(const BernoulliSpec& spec, const Exponent& m);

/// C-type number C_m^{(k),(d)}: generating function
/// Li^ш_k(z_1,...,z_r) / ∏_{j=1}^{d} (e^{T_j} - 1).
Rational cnum(const std::vector<int>& k, int d, const Exponent& m);

/// Non-strict variant 𝔹★_m^{(u)}, realised as B_m^{(u)}(id; 1,...,1; 1,0,...,0).
Rational star_num(const std::vector<int>& u, const Exponent& m);

struct IdentityCheck {
  bool equal = false;
  Rational lhs;
  Rational rhs;
};

/// B_n^{(-k)}(σ;a;b) against B_k^{(-n)}(σ⁻¹;b;a).
IdentityCheck duality_check(const std::vector<int>& k, const Exponent& n,
                            const Permutation& sigma, const std::vector<int>& a,
                            const std::vector<int>& b);

struct DualityFailure {
  std::vector<int> k;
  Exponent n;
  Permutation sigma;
  std::vector<int> a;
  std::vector<int> b;
  IdentityCheck check;
};

struct DualityScanReport {
  std::size_t checked = 0;
  std::vector<DualityFailure> failures;
};

/// duality_check over every k, n ∈ {0..max}^r, σ ∈ S_r and a, b ∈ {0,1}^r
/// for which both (σ;a;b) and (σ⁻¹;b;a) are admissible.
DualityScanReport duality_scan(std::size_t r, int max);

/// C_n^{(-k_1-1,-k_2,...,-k_r),(r)} against the block sum of depth-d=1
/// C-numbers over all ordered set partitions into consecutive blocks.
IdentityCheck cnum_duality_check(const std::vector<int>& k, const Exponent& n);

/// B_n^{(-k)}(id; 1,...,1; 1,0,...,0) against
/// Σ_{0<=m<=k} ∏ binom(k_i, m_i) C_{k-m}^{(-n),(r)}.
IdentityCheck star_identity_check(const std::vector<int>& k, const Exponent& n);

/// η(u; s; σ; a; b) at s = -n with all n_j >= 0: equals B_n^{(u)}(σ;a;b).
Rational eta_nonpositive(const std::vector<int>& u, const std::vector<int>& s,
                         const Permutation& sigma, const std::vector<int>& a,
                         const std::vector<int>& b);

}  // namespace polyzeta
