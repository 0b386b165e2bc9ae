#pragma once

#include <string>
#include <vector>

#include "polyzeta/etareduce.hpp"
#include "polyzeta/mzv.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

/// η★(u;s;σ;v) = η★★(s;u;σ⁻¹;v), one duality instance.
struct DualityPair {
  std::vector<int> u;
  std::vector<int> s;
  Permutation sigma;
  std::vector<int> v;

  int weight() const;
  /// "star(1,1;1,2;2,1;1,1) = starstar(1,2;1,1;2,1;1,1)".
  std::string to_string() const;
};

/// The duality families used for weights 4, 5 and 6.
std::vector<DualityPair> standard_dualities(int weight);

using RationalRow = std::vector<Rational>;

struct RelationMatrix {
  int weight = 0;
  std::vector<MzvIndex> basis;
  std::vector<RationalRow> rows;
  std::vector<std::string> provenance;
};

/// Coefficient vector of expr over basis. Throws InvalidSpec if expr uses an
/// index outside the basis.
RationalRow to_row(const MzvExpr& expr, const std::vector<MzvIndex>& basis);
MzvExpr from_row(const RationalRow& row, const std::vector<MzvIndex>& basis);

/// Rows relation_from_duality(d) over admissible_indices(weight).
RelationMatrix assemble_relation_matrix(int weight, const std::vector<DualityPair>& dualities);

/// Reduced row echelon form with zero rows removed.
std::vector<RationalRow> rref(std::vector<RationalRow> rows);
std::size_t rank(const std::vector<RationalRow>& rows);

/// Whether candidate lies in the ℚ-row space of m.
bool rowspace_membership(const RelationMatrix& m, const RationalRow& candidate);

/// Expresses every basis element through the non-pivot ("free") elements of
/// the reduced system. Each entry is the relation  index = Σ c_f · free_f.
struct Solution {
  MzvIndex index;
  MzvExpr value;
};
std::vector<Solution> solve_in_free_basis(const RelationMatrix& m);

}  // namespace polyzeta
