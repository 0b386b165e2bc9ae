#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyzeta/error.hpp"
#include "polyzeta/mzv_numeric.hpp"

using namespace polyzeta;
using std::numbers::pi;

namespace {

constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kZeta5 = 1.0369277551433699263;

// Nested sum Σ_{0<m_1<m_2<N} m_1^{-k_1} m_2^{-k_2}, closed with the midpoint
// estimate of Σ_{m_2≥N} m_2^{-k_2} times the frozen inner sum.
double brute_depth2(int k1, int k2, int n) {
  double total = 0.0, inner = 0.0;
  for (int m = 1; m < n; ++m) {
    total += inner / std::pow(m, k2);
    inner += 1.0 / std::pow(m, k1);
  }
  return total + inner / ((k2 - 1) * std::pow(n - 0.5, k2 - 1));
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(mzv_eval({2}).value == doctest::Approx(pi * pi / 6).epsilon(1e-13));
  CHECK(mzv_eval({4}).value == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-13));
  CHECK(mzv_eval({1, 2}).value == doctest::Approx(kZeta3).epsilon(1e-13));
  CHECK(mzv_eval({1, 1, 2}).value == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-13));
  CHECK(mzv_eval({1, 1, 1, 2}).value == doctest::Approx(kZeta5).epsilon(1e-13));
  // ζ(2,2) = (ζ(2)^2 - ζ(4)) / 2.
  CHECK(mzv_eval({2, 2}).value == doctest::Approx(std::pow(pi, 4) / 120).epsilon(1e-13));
  CHECK(mzv_eval({3}).error < 1e-10);
}

TEST_CASE("inadmissible indices diverge") {
  CHECK_THROWS_AS(mzv_eval({2, 1}), Error);
  try {
    mzv_eval({1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Divergence);
  }
}

TEST_CASE("agrees with direct summation in depth two") {
  for (auto [k1, k2] : {std::pair{1, 3}, {2, 3}, {3, 2}, {1, 4}}) {
    const double brute = brute_depth2(k1, k2, 200000);
    CHECK(mzv_eval({k1, k2}).value == doctest::Approx(brute).epsilon(1e-8));
  }
}

TEST_CASE("sum formula: fixed weight and depth sum to ζ(w)") {
  for (int w = 3; w <= 7; ++w) {
    const double zw = mzv_eval({w}).value;
    for (int depth = 2; depth < w; ++depth) {
      double total = 0.0;
      for (const auto& idx : admissible_indices(w))
        if (static_cast<int>(idx.size()) == depth) total += mzv_eval(idx).value;
      INFO("w=", w, " depth=", depth);
      CHECK(total == doctest::Approx(zw).epsilon(1e-12));
    }
  }
}

TEST_CASE("linear combinations") {
  MzvExpr e;
  e.add({4}, 1);
  e.add({1, 1, 2}, -1);
  CHECK(std::abs(mzv_expr_eval(e).value) < 1e-13);
}

TEST_CASE("polylogarithm on the negative axis") {
  CHECK(polylog_neg_axis(1, -3.0).value == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
  CHECK(polylog_neg_axis(2, -1.0).value == doctest::Approx(-pi * pi / 12).epsilon(1e-12));
  CHECK(polylog_neg_axis(3, -1.0).value == doctest::Approx(-0.75 * kZeta3).epsilon(1e-12));
  CHECK(polylog_neg_axis(2, 0.0).value == 0.0);
  // Inversion: Li_2(-x) + Li_2(-1/x) = -π²/6 - log²(x)/2.
  for (double x : {2.0, 7.5, 1e3, 1e8}) {
    const double lhs = polylog_neg_axis(2, -x).value + polylog_neg_axis(2, -1 / x).value;
    CHECK(lhs == doctest::Approx(-pi * pi / 6 - 0.5 * std::pow(std::log(x), 2)).epsilon(1e-11));
  }
  // Li_3(-x) - Li_3(-1/x) = -π²/6 log x - log³(x)/6.
  for (double x : {3.0, 1e5}) {
    const double lhs = polylog_neg_axis(3, -x).value - polylog_neg_axis(3, -1 / x).value;
    const double l = std::log(x);
    CHECK(lhs == doctest::Approx(-pi * pi / 6 * l - l * l * l / 6).epsilon(1e-11));
  }
  CHECK_THROWS_AS(polylog_neg_axis(2, 0.5), Error);
}

TEST_CASE("depth-one eta by quadrature") {
  CHECK(eta_r1_quadrature(1, 1).value == doctest::Approx(pi * pi / 6).epsilon(1e-10));
  // Duality η(k; n) = η(n; k).
  for (auto [k, n] : {std::pair{1, 2}, {1, 4}, {2, 3}, {1, 5}}) {
    CHECK(eta_r1_quadrature(k, n).value ==
          doctest::Approx(eta_r1_quadrature(n, k).value).epsilon(1e-9));
  }
}
