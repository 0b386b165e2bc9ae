#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyzeta/hyperlog.hpp"
#include "polyzeta/mzv.hpp"
#include "polyzeta/permutation.hpp"

namespace polyzeta {

/// η★(u;s;σ;v) = η(u;s;σ;1,...,1;v) and η★★(u;s;σ;v) = η(u;s;σ;v;1,...,1).
/// In both cases v is the {0,1} vector named in the shorthand.
enum class Branch { Star, StarStar };

std::string to_string(Branch b);
Branch parse_branch(const std::string& text);

/// Arguments of η(u; s; σ; a; b) at positive integers.
struct EtaSpec {
  std::vector<int> u;
  std::vector<int> s;
  Permutation sigma;
  std::vector<int> a;
  std::vector<int> b;

  std::size_t depth() const { return u.size(); }
  /// η★ / η★★ shorthand.
  static EtaSpec star(std::vector<int> u, std::vector<int> s, Permutation sigma, std::vector<int> v);
  static EtaSpec starstar(std::vector<int> u, std::vector<int> s, Permutation sigma,
                          std::vector<int> v);
  static EtaSpec make(Branch branch, std::vector<int> u, std::vector<int> s, Permutation sigma,
                      std::vector<int> v);
  /// Reduction-mode checks: u_j, s_j >= 1, a, b ∈ {0,1}^r with
  /// a_1 = a_{σ⁻¹(1)} = b_1 = b_{σ⁻¹(1)} = 1 and a_{σ(j)} + b_j >= 1.
  void validate() const;
  bool is_valid() const;
  int weight() const;
};

/// One strict piece of a non-strict ш-polylogarithm: Li^ш_index evaluated at
/// the arguments in `positions` (1-based, increasing).
struct ExpansionTerm {
  std::vector<int> index;
  std::vector<int> positions;

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
  friend auto operator<=>(const ExpansionTerm&, const ExpansionTerm&) = default;
};

/// Li^ш_u(z; a) for a ∈ {0,1}^r, a_1 = 1, as a sum of strict polylogarithms:
/// every subset of the positions with a_j = 0 may have l_j = 0, in which case
/// u_j merges into the nearest surviving position on its left.
std::vector<ExpansionTerm> expand_nonstrict(const std::vector<int>& u, const std::vector<int>& a);

/// Integrand over 0 < x_r < ... < x_1 < 1 after x_i = 1 - e^{-t_i-...-t_r}:
/// the value is ∫ expr · ∏_i kernel_i(x_i) dx_i, each kernel a sum of
/// c / (x_i - pole). kernels[i-1] belongs to x_i.
struct Integrand {
  HyperlogExpr expr;
  std::vector<std::map<Letter, Rational>> kernels;
};

Integrand build_integrand(const EtaSpec& spec);

/// η(u; s; σ; a; b) ∈ 𝒵_{Σu+Σs} as an explicit ℚ-combination of MZVs.
MzvExpr reduce_eta(const EtaSpec& spec);
MzvExpr reduce_eta(Branch branch, const std::vector<int>& u, const std::vector<int>& s,
                   const Permutation& sigma, const std::vector<int>& v);

/// η★(u;s;σ;v) - η★★(s;u;σ⁻¹;v), which vanishes by the duality formula.
MzvExpr relation_from_duality(const std::vector<int>& u, const std::vector<int>& s,
                              const Permutation& sigma, const std::vector<int>& v);

}  // namespace polyzeta
