#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyzeta/rational.hpp"

namespace polyzeta {

/// Composition (m_1,...,m_p) for ζ(m_1,...,m_p) = Σ_{0<n_1<...<n_p} ∏ n_i^{-m_i}.
using MzvIndex = std::vector<int>;

bool is_admissible(const MzvIndex& index);
int weight(const MzvIndex& index);
/// "ζ(1,1,2)".
std::string mzv_to_string(const MzvIndex& index);

/// Basis order: depth first, then lexicographic.
struct MzvOrder {
  bool operator()(const MzvIndex& x, const MzvIndex& y) const;
};

/// All admissible indices of the given weight in MzvOrder.
std::vector<MzvIndex> admissible_indices(int weight);

/// Formal ℚ-linear combination of MZV symbols.
class MzvExpr {
 public:
  using Terms = std::map<MzvIndex, Rational, MzvOrder>;

  MzvExpr() = default;
  static MzvExpr single(const MzvIndex& index, const Rational& c = 1);

  /// Throws InvalidSpec for an inadmissible index.
  void add(const MzvIndex& index, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const MzvIndex& index) const;

  /// Common weight of all terms; -1 if the expression is empty or mixed.
  int weight() const;
  bool is_homogeneous() const;

  MzvExpr operator+(const MzvExpr& o) const;
  MzvExpr operator-(const MzvExpr& o) const;
  MzvExpr operator-() const;
  friend MzvExpr operator*(const Rational& c, const MzvExpr& e);
  friend bool operator==(const MzvExpr&, const MzvExpr&) = default;

  /// "ζ(1,1,2) + 2ζ(2,2)"; "0" when empty.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace polyzeta
