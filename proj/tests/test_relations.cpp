#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polyzeta/error.hpp"
#include "polyzeta/mzv_numeric.hpp"
#include "polyzeta/relations.hpp"

using namespace polyzeta;

namespace {

RationalRow ints(std::initializer_list<int> v) {
  RationalRow r;
  for (int x : v) r.emplace_back(x);
  return r;
}

bool equal_up_to_sign(const RationalRow& a, const RationalRow& b) {
  if (a == b) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

// Basis order: ζ(6), ζ(1,5), ζ(2,4), ζ(3,3), ζ(4,2), ζ(1,1,4), ζ(1,2,3),
// ζ(1,3,2), ζ(2,1,3), ζ(2,2,2), ζ(3,1,2), ζ(1,1,1,3), ζ(1,1,2,2), ζ(1,2,1,2),
// ζ(2,1,1,2), ζ(1,1,1,1,2).
const std::vector<RationalRow> kWeight6Rows = {
    ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -4}),
    ints({0, 2, 1, 1, 1, 3, 3, 3, 2, 2, 2, 0, 1, 2, 2, -5}),
    ints({0, 0, 0, 1, 0, 0, 1, -2, 1, 0, 1, 3, -3, -3, 0, 0}),
    ints({0, 6, -1, -1, 0, 7, 7, 2, 2, 0, -2, 9, 3, 0, 0, 0}),
    ints({0, 0, 1, 1, -1, 4, 1, -1, 1, -1, 0, 7, 2, 0, 0, 0}),
    ints({0, 0, 2, 1, 0, 4, 1, 2, 1, 1, 0, 4, 3, 0, -2, 0}),
    ints({0, -6, 1, 2, 0, -1, -2, -4, 1, -1, 2, -1, -6, -2, 0, 0}),
    ints({0, 4, 0, -1, 0, 11, 3, 2, -2, 0, -2, 1, 6, 2, 0, 0}),
    ints({0, 6, 2, 0, -1, 9, 4, 3, 1, 0, -1, -3, 2, 1, 0, 0}),
    ints({0, 2, -1, 0, 1, -4, 2, 1, 2, 1, -1, -2, -2, -1, 0, 0}),
    ints({0, -2, 1, 0, 0, -2, 0, -2, 2, -2, 0, 0, -3, 0, 1, 0}),
    ints({0, 4, -4, 1, 0, 3, 3, 2, -2, -2, 0, 3, 1, 0, 0, 0}),
    ints({0, 4, 0, -1, 0, 8, 3, 4, -1, -2, -3, 7, 7, 1, -5, 4}),
    ints({0, -2, 1, 0, 0, 1, -2, 0, -1, 0, -1, 0, 3, -1, -2, 2}),
};

const std::vector<RationalRow> kWeight6Reduced = {
    ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}),
    ints({0, 24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -12, 7}),
    ints({0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 3}),
    ints({0, 0, 0, 24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12, -13}),
    ints({0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}),
    ints({0, 0, 0, 0, 0, 48, 0, 0, 0, 0, 0, 0, 0, 0, -48, 31}),
    ints({0, 0, 0, 0, 0, 0, 48, 0, 0, 0, 0, 0, 0, 0, 144, -97}),
    ints({0, 0, 0, 0, 0, 0, 0, 12, 0, 0, 0, 0, 0, 0, -18, 11}),
    ints({0, 0, 0, 0, 0, 0, 0, 0, 12, 0, 0, 0, 0, 0, -18, 11}),
    ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 16, 0, 0, 0, 0, 0, -3}),
    ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 48, 0, 0, 0, 48, -61}),
    ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 24, 0, 0, -12, 7}),
    ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, -4, 3}),
    ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 24, 12, -13}),
};

}  // namespace

TEST_CASE("exact elimination") {
  const std::vector<RationalRow> m = {ints({1, 2, 3}), ints({2, 4, 6}), ints({0, 1, 1})};
  const auto r = rref(m);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == ints({1, 0, 1}));
  CHECK(r[1] == ints({0, 1, 1}));
  CHECK(rank({ints({0, 0}), ints({0, 0})}) == 0);
  CHECK(rref({{Rational(1, 3), Rational(2, 3)}})[0] == ints({1, 2}));

  RelationMatrix rm;
  rm.basis = {{3}, {1, 2}, {1, 1, 1}};
  rm.rows = m;
  CHECK(rowspace_membership(rm, ints({1, 3, 4})));
  CHECK_FALSE(rowspace_membership(rm, ints({0, 0, 1})));
  CHECK_THROWS_AS(rowspace_membership(rm, ints({1, 1})), Error);
}

TEST_CASE("rows round-trip through expressions") {
  const auto basis = admissible_indices(4);
  MzvExpr e;
  e.add({1, 3}, 2);
  e.add({4}, Rational(-1, 2));
  CHECK(from_row(to_row(e, basis), basis) == e);
  CHECK_THROWS_AS(to_row(MzvExpr::single({5}), basis), Error);
}

TEST_CASE("weight 4") {
  const auto m = assemble_relation_matrix(4, standard_dualities(4));
  CHECK(m.basis.size() == 4);
  CHECK(rank(m.rows) == 2);
  for (const auto& row : m.rows) CHECK(std::abs(mzv_expr_eval(from_row(row, m.basis)).value) < 1e-12);
  MzvExpr known;
  known.add({1, 3}, 1);
  known.add({2, 2}, -1);
  known.add({1, 1, 2}, Rational(1, 2));
  CHECK(rowspace_membership(m, to_row(known, m.basis)));
  MzvExpr not_implied;
  not_implied.add({4}, 1);
  not_implied.add({1, 3}, -4);
  CHECK_FALSE(rowspace_membership(m, to_row(not_implied, m.basis)));
}

TEST_CASE("weight 5 elimination") {
  const auto m = assemble_relation_matrix(5, standard_dualities(5));
  CHECK(m.rows.size() == 6);
  CHECK(rank(m.rows) == 6);
  // Each reference consequence, written as a row that must vanish.
  const std::vector<std::vector<std::pair<MzvIndex, int>>> shown = {
      {{{5}, 1}, {{1, 1, 1, 2}, -1}},
      {{{3, 2}, 1}, {{2, 1, 2}, -1}},
      {{{1, 4}, 4}, {{2, 1, 2}, -2}, {{1, 1, 1, 2}, 1}},
      {{{2, 3}, 4}, {{2, 1, 2}, 6}, {{1, 1, 1, 2}, -5}},
      {{{1, 1, 3}, 4}, {{2, 1, 2}, -2}, {{1, 1, 1, 2}, 1}},
      {{{1, 2, 2}, 4}, {{2, 1, 2}, 6}, {{1, 1, 1, 2}, -5}},
  };
  for (const auto& terms : shown) {
    MzvExpr e;
    for (const auto& [idx, c] : terms) e.add(idx, c);
    INFO(e.to_string());
    CHECK(rowspace_membership(m, to_row(e, m.basis)));
    CHECK(std::abs(mzv_expr_eval(e).value) < 1e-12);
  }
  const auto sol = solve_in_free_basis(m);
  CHECK(sol.size() == 6);
  for (const auto& s : sol) {
    for (const auto& [idx, c] : s.value.terms()) {
      const bool free = idx == MzvIndex{2, 1, 2} || idx == MzvIndex{1, 1, 1, 2};
      CHECK(free);
    }
  }
}

TEST_CASE("weight 6 system") {
  const auto m = assemble_relation_matrix(6, standard_dualities(6));
  REQUIRE(m.basis.size() == 16);
  REQUIRE(m.rows.size() == 14);
  CHECK(m.basis[1] == MzvIndex{1, 5});
  CHECK(m.basis[15] == MzvIndex{1, 1, 1, 1, 2});
  CHECK(rank(m.rows) == 14);

  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    INFO("row ", i + 1, ": ", m.provenance[i]);
    CHECK(std::abs(mzv_expr_eval(from_row(m.rows[i], m.basis)).value) < 1e-12);
    CHECK(equal_up_to_sign(m.rows[i], kWeight6Rows[i]));
  }

  for (const auto& row : kWeight6Reduced) {
    CHECK(rowspace_membership(m, row));
    CHECK(std::abs(mzv_expr_eval(from_row(row, m.basis)).value) < 1e-12);
  }

  const auto sol = solve_in_free_basis(m);
  REQUIRE(sol.size() == 14);
  for (const auto& s : sol) {
    MzvExpr rel = s.value;
    rel.add(s.index, -1);
    CHECK(std::abs(mzv_expr_eval(rel).value) < 1e-12);
  }
  CHECK(sol[1].index == MzvIndex{1, 5});
  MzvExpr want;
  want.add({2, 1, 1, 2}, Rational(1, 2));
  want.add({1, 1, 1, 1, 2}, Rational(-7, 24));
  CHECK(sol[1].value == want);
}

TEST_CASE("weight 6: reference combined rows are coefficient columns, not relations") {
  const auto m = assemble_relation_matrix(6, standard_dualities(6));
  const auto combined1 = ints({0, 1, -2, -1, 2, 2, -6, 3, 3, 0, -2, 1, -2, -1, 2, 0});
  const auto combined2 = ints({48, -14, 36, 26, 0, -31, 97, -44, -44, 9, 61, -14, 36, 26, 0, 48});
  CHECK_FALSE(rowspace_membership(m, combined1));
  CHECK_FALSE(rowspace_membership(m, combined2));
  CHECK(mzv_expr_eval(from_row(combined1, m.basis)).value > 1.0);
  CHECK(mzv_expr_eval(from_row(combined2, m.basis)).value > 100.0);

  // With ζ_i = α_i ζ(2,1,1,2) + β_i ζ(1,1,1,1,2), the rows are 2α and 48β.
  const MzvIndex A{2, 1, 1, 2}, B{1, 1, 1, 1, 2};
  RationalRow alpha(16, 0), beta(16, 0);
  for (const auto& s : solve_in_free_basis(m)) {
    const auto i = static_cast<std::size_t>(
        std::find(m.basis.begin(), m.basis.end(), s.index) - m.basis.begin());
    alpha[i] = s.value.coeff(A);
    beta[i] = s.value.coeff(B);
  }
  alpha[14] = 1;
  beta[15] = 1;
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(combined1[i] == 2 * alpha[i]);
    CHECK(combined2[i] == 48 * beta[i]);
  }
}

TEST_CASE("duality family bookkeeping") {
  CHECK(standard_dualities(5).size() == 6);
  CHECK(standard_dualities(6).size() == 14);
  for (const auto& d : standard_dualities(6)) CHECK(d.weight() == 6);
  CHECK(standard_dualities(4)[1].to_string() == "star(1;3;id;1) = starstar(3;1;id;1)");
  CHECK_THROWS_AS(standard_dualities(7), Error);
  CHECK_THROWS_AS(assemble_relation_matrix(5, standard_dualities(4)), Error);
}
