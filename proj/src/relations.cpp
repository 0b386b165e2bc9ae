#include "polyzeta/relations.hpp"

#include <algorithm>
#include <numeric>

#include "polyzeta/error.hpp"

namespace polyzeta {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

DualityPair pair(std::vector<int> u, std::vector<int> s, std::vector<int> sigma, std::vector<int> v) {
  return DualityPair{std::move(u), std::move(s), Permutation(std::move(sigma)), std::move(v)};
}

}  // namespace

int DualityPair::weight() const {
  return std::accumulate(u.begin(), u.end(), 0) + std::accumulate(s.begin(), s.end(), 0);
}

std::string DualityPair::to_string() const {
  return "star(" + join(u) + ";" + join(s) + ";" + sigma.to_string() + ";" + join(v) +
         ") = starstar(" + join(s) + ";" + join(u) + ";" + sigma.inverse().to_string() + ";" +
         join(v) + ")";
}

std::vector<DualityPair> standard_dualities(int weight) {
  const std::vector<int> id2{1, 2}, sw{2, 1};
  switch (weight) {
    case 4:
      return {pair({1, 1}, {1, 1}, id2, {1, 0}), pair({1}, {3}, {1}, {1})};
    case 5:
      return {pair({1}, {4}, {1}, {1}),
              pair({2}, {3}, {1}, {1}),
              pair({1, 1}, {1, 2}, id2, {1, 1}),
              pair({1, 1}, {2, 1}, id2, {1, 1}),
              pair({1, 1}, {2, 1}, sw, {1, 1}),
              pair({1, 1}, {1, 2}, sw, {1, 1})};
    case 6:
      return {pair({1}, {5}, {1}, {1}),
              pair({2}, {4}, {1}, {1}),
              pair({1, 1}, {2, 2}, id2, {1, 1}),
              pair({1, 2}, {2, 1}, id2, {1, 1}),
              pair({1, 1}, {1, 3}, id2, {1, 1}),
              pair({1, 1}, {3, 1}, id2, {1, 1}),
              pair({1, 1}, {2, 2}, sw, {1, 1}),
              pair({1, 2}, {2, 1}, sw, {1, 1}),
              pair({1, 1}, {1, 3}, sw, {1, 1}),
              pair({1, 1}, {3, 1}, sw, {1, 1}),
              pair({1, 1, 1}, {1, 1, 1}, {1, 2, 3}, {1, 0, 1}),
              pair({1, 1, 1}, {1, 1, 1}, {1, 2, 3}, {1, 1, 0}),
              pair({1, 2}, {1, 2}, id2, {1, 0}),
              pair({2, 1}, {2, 1}, id2, {1, 0})};
    default:
      fail(ErrorKind::Unsupported, "no duality family for weight " + std::to_string(weight));
  }
}

RationalRow to_row(const MzvExpr& expr, const std::vector<MzvIndex>& basis) {
  RationalRow row(basis.size(), 0);
  for (const auto& [idx, c] : expr.terms()) {
    auto it = std::find(basis.begin(), basis.end(), idx);
    if (it == basis.end())
      fail(ErrorKind::InvalidSpec, mzv_to_string(idx) + " is not in the basis");
    row[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return row;
}

MzvExpr from_row(const RationalRow& row, const std::vector<MzvIndex>& basis) {
  if (row.size() != basis.size()) fail(ErrorKind::Dimension, "row length does not match basis");
  MzvExpr e;
  for (std::size_t i = 0; i < row.size(); ++i) e.add(basis[i], row[i]);
  return e;
}

RelationMatrix assemble_relation_matrix(int weight, const std::vector<DualityPair>& dualities) {
  RelationMatrix m;
  m.weight = weight;
  m.basis = admissible_indices(weight);
  for (const auto& d : dualities) {
    if (d.weight() != weight)
      fail(ErrorKind::InvalidSpec, "duality " + d.to_string() + " has weight " +
                                       std::to_string(d.weight()) + ", expected " +
                                       std::to_string(weight));
    m.rows.push_back(to_row(relation_from_duality(d.u, d.s, d.sigma, d.v), m.basis));
    m.provenance.push_back(d.to_string());
  }
  return m;
}

std::vector<RationalRow> rref(std::vector<RationalRow> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    const Rational inv = Rational(1) / rows[lead][c];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[lead][k];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t rank(const std::vector<RationalRow>& rows) { return rref(rows).size(); }

bool rowspace_membership(const RelationMatrix& m, const RationalRow& candidate) {
  if (candidate.size() != m.basis.size())
    fail(ErrorKind::InvalidSpec, "candidate row does not match the basis");
  auto base = m.rows;
  const std::size_t r = rank(base);
  base.push_back(candidate);
  return rank(base) == r;
}

std::vector<Solution> solve_in_free_basis(const RelationMatrix& m) {
  const auto reduced = rref(m.rows);
  const std::size_t n = m.basis.size();
  std::vector<bool> pivot(n, false);
  std::vector<std::size_t> pivot_col;
  for (const auto& row : reduced) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot[c] = true;
    pivot_col.push_back(c);
  }
  std::vector<Solution> out;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    MzvExpr value;
    for (std::size_t c = 0; c < n; ++c)
      if (!pivot[c] && reduced[i][c] != 0) value.add(m.basis[c], -reduced[i][c]);
    out.push_back({m.basis[pivot_col[i]], value});
  }
  return out;
}

}  // namespace polyzeta
