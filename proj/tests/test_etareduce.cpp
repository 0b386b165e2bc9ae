#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>

#include "polyzeta/error.hpp"
#include "polyzeta/etareduce.hpp"
#include "polyzeta/mzv_numeric.hpp"

using namespace polyzeta;

namespace {

const Permutation kId2 = Permutation::identity(2);
const Permutation kSwap({2, 1});

MzvExpr combo(std::initializer_list<std::pair<MzvIndex, int>> terms) {
  MzvExpr e;
  for (const auto& [idx, c] : terms) e.add(idx, c);
  return e;
}

// Σ_{l_j ≥ lower_j, l_j < cutoff} ∏ z_j^{l_j} / ∏ (l_1+...+l_j)^{u_j}.
double li_sha_brute(const std::vector<int>& u, const std::vector<double>& z,
                    const std::vector<int>& lower, int cutoff) {
  std::function<double(std::size_t, long, double)> rec = [&](std::size_t j, long partial,
                                                            double acc) -> double {
    if (j == u.size()) return acc;
    double total = 0.0;
    for (int l = lower[j]; l < cutoff; ++l) {
      const long p = partial + l;
      if (p == 0) continue;
      total += rec(j + 1, p, acc * std::pow(z[j], l) / std::pow(static_cast<double>(p), u[j]));
    }
    return total;
  };
  return rec(0, 0, 1.0);
}

double kernel_value(const std::map<Letter, Rational>& k, double x, const std::vector<double>& xs) {
  double s = 0.0;
  for (const auto& [pole, c] : k) s += c.get_d() / (x - pole.value(xs));
  return s;
}

// ∫_{0<x_2<x_1<1} expr · kernel_1 · kernel_2 by nested tanh-sinh; only good
// to a few digits because of the logarithmic endpoint behaviour.
double integrate_depth2(const Integrand& in) {
  boost::math::quadrature::tanh_sinh<double> ts(7);
  auto outer = [&](double x1) {
    auto inner = [&](double x2) {
      if (!(x2 > 0 && x2 < x1 && x1 < 1)) return 0.0;
      const std::vector<double> xs{x1, x2};
      const double f = expr_eval_numeric(in.expr, xs) * kernel_value(in.kernels[0], x1, xs) *
                       kernel_value(in.kernels[1], x2, xs);
      return std::isfinite(f) ? f : 0.0;
    };
    return ts.integrate(inner, 0.0, x1, 1e-8);
  };
  return ts.integrate(outer, 0.0, 1.0, 1e-8);
}

}  // namespace

TEST_CASE("non-strict expansion") {
  CHECK(expand_nonstrict({1, 1}, {1, 0}) ==
        std::vector<ExpansionTerm>{{{1, 1}, {1, 2}}, {{2}, {1}}});
  CHECK(expand_nonstrict({1, 2}, {1, 1}) == std::vector<ExpansionTerm>{{{1, 2}, {1, 2}}});

  const auto terms = expand_nonstrict({1, 2, 3}, {1, 0, 0});
  CHECK(terms.size() == 4);
  const std::vector<ExpansionTerm> expect = {
      {{1, 2, 3}, {1, 2, 3}}, {{1, 5}, {1, 2}}, {{3, 3}, {1, 3}}, {{6}, {1}}};
  for (const auto& t : expect) CHECK(std::find(terms.begin(), terms.end(), t) != terms.end());

  CHECK_THROWS_AS(expand_nonstrict({1, 1}, {0, 1}), Error);
}

TEST_CASE("non-strict expansion agrees with direct summation") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{1, 1}, {1, 0}}, {{2, 1, 1}, {1, 0, 1}}, {{1, 2, 1}, {1, 0, 0}}, {{1, 1, 2}, {1, 1, 0}}};
  const std::vector<double> z = {0.3, 0.25, 0.2};
  for (const auto& [u, a] : cases) {
    const std::vector<double> zr(z.begin(), z.begin() + static_cast<long>(u.size()));
    const double direct = li_sha_brute(u, zr, a, 60);
    double via_terms = 0.0;
    for (const auto& t : expand_nonstrict(u, a)) {
      std::vector<double> zs;
      for (int p : t.positions) zs.push_back(zr[static_cast<std::size_t>(p - 1)]);
      via_terms += li_sha_brute(t.index, zs, std::vector<int>(t.index.size(), 1), 60);
    }
    CHECK(via_terms == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(EtaSpec::star({1, 1}, {1}, kId2, {1, 1}).validate(), Error);
  CHECK_THROWS_AS(EtaSpec::star({1, 0}, {1, 1}, kId2, {1, 1}).validate(), Error);
  CHECK_THROWS_AS(EtaSpec::star({1, 1}, {1, 1}, kSwap, {1, 0}).validate(), Error);
  CHECK_NOTHROW(EtaSpec::star({1, 1}, {1, 1}, kId2, {1, 0}).validate());
  CHECK(EtaSpec::star({1, 2}, {3, 1}, kId2, {1, 1}).weight() == 7);
  CHECK(parse_branch("starstar") == Branch::StarStar);
  CHECK_THROWS_AS(parse_branch("both"), Error);
}

TEST_CASE("depth one") {
  CHECK(reduce_eta(Branch::Star, {1}, {1}, Permutation::identity(1), {1}) ==
        MzvExpr::single({2}));
  for (auto [k, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 4}, {4, 1}}) {
    const auto e = reduce_eta(Branch::Star, {k}, {n}, Permutation::identity(1), {1});
    CHECK(e.weight() == k + n);
    CHECK(mzv_expr_eval(e).value ==
          doctest::Approx(eta_r1_quadrature(k, n).value).epsilon(1e-9));
  }
}

TEST_CASE("weight-4 reference values") {
  CHECK(reduce_eta(Branch::Star, {1, 1}, {1, 1}, kId2, {1, 0}) ==
        combo({{{1, 1, 2}, 1}, {{2, 2}, 2}}));
  CHECK(reduce_eta(Branch::StarStar, {1, 1}, {1, 1}, kId2, {1, 0}) ==
        combo({{{1, 1, 2}, 2}, {{1, 3}, 2}}));
}

TEST_CASE("weight-5 reference values") {
  CHECK(reduce_eta(Branch::Star, {1, 1}, {1, 2}, kSwap, {1, 1}) ==
        combo({{{1, 4}, -2}, {{2, 3}, 1}, {{1, 1, 3}, 4}}));
  CHECK(reduce_eta(Branch::StarStar, {1, 2}, {1, 1}, kSwap.inverse(), {1, 1}) ==
        combo({{{1, 2, 2}, 1}, {{2, 3}, 1}, {{1, 1, 3}, 3}, {{1, 4}, 4}, {{3, 2}, -1}}));
}

TEST_CASE("weight-5 relations match the reference relations up to sign") {
  struct Case {
    std::vector<int> u, s;
    Permutation sigma;
    MzvExpr shown;
  };
  const Permutation id1 = Permutation::identity(1);
  const std::vector<Case> cases = {
      {{1}, {4}, id1,
       combo({{{5}, 1}, {{1, 4}, 1}, {{2, 3}, 1}, {{3, 2}, 1}, {{1, 1, 3}, 1}, {{1, 2, 2}, 1},
              {{2, 1, 2}, 1}, {{1, 1, 1, 2}, -3}})},
      {{2}, {3}, id1,
       combo({{{1, 4}, 2}, {{2, 3}, 1}, {{3, 2}, 1}, {{1, 2, 2}, 1}, {{2, 1, 2}, 1},
              {{1, 1, 1, 2}, -2}})},
      {{1, 1}, {1, 2}, kId2, combo({{{1, 4}, 2}, {{3, 2}, -1}, {{1, 1, 3}, 3}, {{1, 2, 2}, 1}})},
      {{1, 1}, {2, 1}, kId2, combo({{{1, 4}, -2}, {{2, 3}, -1}, {{1, 1, 3}, -3}, {{2, 1, 2}, 1}})},
      {{1, 1}, {2, 1}, kSwap,
       combo({{{1, 4}, 4}, {{2, 3}, -2}, {{3, 2}, -1}, {{1, 1, 3}, 1}, {{1, 2, 2}, 3}})},
      {{1, 1}, {1, 2}, kSwap, combo({{{1, 4}, 6}, {{3, 2}, -1}, {{1, 1, 3}, -1}, {{1, 2, 2}, 1}})},
  };
  for (const auto& c : cases) {
    const auto rel = relation_from_duality(c.u, c.s, c.sigma, std::vector<int>(c.u.size(), 1));
    INFO(rel.to_string());
    CHECK((rel == c.shown || rel == Rational(-1) * c.shown));
    CHECK(std::abs(mzv_expr_eval(rel).value) < 1e-12);
  }
}

TEST_CASE("reductions are homogeneous and relations vanish numerically") {
  const std::vector<std::vector<int>> pairs2 = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}};
  const std::vector<std::vector<int>> offsets = {{1, 1}, {1, 0}};
  for (const auto& u : pairs2)
    for (const auto& s : pairs2)
      for (const auto& sigma : {kId2, kSwap})
        for (const auto& v : offsets) {
          if (sigma == kSwap && v[1] == 0) continue;
          const auto star = reduce_eta(Branch::Star, u, s, sigma, v);
          const auto starstar = reduce_eta(Branch::StarStar, s, u, sigma.inverse(), v);
          const int w = u[0] + u[1] + s[0] + s[1];
          CHECK(star.weight() == w);
          CHECK(starstar.weight() == w);
          INFO("u=", u[0], ",", u[1], " s=", s[0], ",", s[1], " σ=", sigma.to_string());
          CHECK(mzv_expr_eval(star).value ==
                doctest::Approx(mzv_expr_eval(starstar).value).epsilon(1e-10));
        }
}

TEST_CASE("depth three duality holds numerically") {
  const Permutation id3 = Permutation::identity(3);
  for (const auto& v : {std::vector<int>{1, 0, 1}, {1, 1, 0}, {1, 1, 1}}) {
    const auto rel = relation_from_duality({1, 1, 1}, {1, 1, 1}, id3, v);
    CHECK(std::abs(mzv_expr_eval(rel).value) < 1e-10);
  }
  const Permutation cyc({2, 3, 1});
  const auto rel = relation_from_duality({1, 1, 1}, {1, 1, 1}, cyc, {1, 1, 1});
  CHECK(std::abs(mzv_expr_eval(rel).value) < 1e-10);
}

TEST_CASE("integrand integrates to the reduced value") {
  for (const auto& spec : {EtaSpec::star({1, 1}, {1, 1}, kId2, {1, 0}),
                           EtaSpec::star({1, 1}, {1, 2}, kSwap, {1, 1}),
                           EtaSpec::starstar({1, 2}, {1, 1}, kSwap, {1, 1})}) {
    const double exact = mzv_expr_eval(reduce_eta(spec)).value;
    CHECK(integrate_depth2(build_integrand(spec)) == doctest::Approx(exact).epsilon(5e-3));
  }
}
