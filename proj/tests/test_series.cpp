#include <random>

#include "doctest.h"
#include "polyzeta/error.hpp"
#include "polyzeta/series.hpp"

using namespace polyzeta;

namespace {

// exp(c t) in one variable straight from the Taylor series.
TruncatedSeries exp_oracle(long c, int order) {
  TruncationProfile p({order});
  TruncatedSeries s(p);
  Rational term = 1;
  for (int m = 0; m <= order; ++m) {
    s.add_term({m}, term);
    term = term * c / (m + 1);
  }
  return s;
}

TruncatedSeries random_series(std::mt19937& rng, const TruncationProfile& p) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  TruncatedSeries s(p);
  for (int i = 0; i <= p.order(0); ++i)
    for (int j = 0; j <= p.order(1); ++j)
      s.add_term({i, j}, Rational(coef(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("addition and cancellation") {
  TruncationProfile p({3});
  auto a = TruncatedSeries::constant(1, p) + TruncatedSeries::monomial(1, {1}, p);
  auto b = TruncatedSeries::monomial(1, {1}, p);
  auto s = a + b;
  CHECK(s.coeff({0}) == 1);
  CHECK(s.coeff({1}) == 2);
  CHECK(a + TruncatedSeries(p) == a);

  TruncationProfile q({2, 2});
  auto m = TruncatedSeries::monomial(1, {1, 1}, q);
  CHECK((m + (-m)).is_zero());
}

TEST_CASE("multiplication truncates to the common window") {
  TruncationProfile p({2});
  auto one = TruncatedSeries::constant(1, p);
  auto t = TruncatedSeries::monomial(1, {1}, p);
  auto prod = (one + t) * (one - t);
  CHECK(prod.coeff({0}) == 1);
  CHECK(prod.coeff({1}) == 0);
  CHECK(prod.coeff({2}) == -1);
  CHECK(prod * one == prod);

  auto e = exp_oracle(1, 6) * exp_oracle(-1, 6);
  CHECK(e == TruncatedSeries::constant(1, TruncationProfile({6})));
}

TEST_CASE("exp_linear coefficients") {
  CHECK(exp_linear(0, 1, TruncationProfile({3, 3})) ==
        TruncatedSeries::constant(1, TruncationProfile({3, 3})));
  auto e = exp_linear(1, 2, TruncationProfile({2, 2}));
  CHECK(e.coeff({0, 1}) == 1);
  CHECK(e.coeff({0, 2}) == Rational(1, 2));
  CHECK(e.coeff({1, 0}) == 0);
  auto f = exp_linear(2, 1, TruncationProfile({5}));
  CHECK(f.coeff({3}) == Rational(4, 3));
  CHECK(f == exp_oracle(2, 5));
  // exp(c(t1+t2)) factors into one-variable exponentials.
  auto g = exp_linear(3, 1, TruncationProfile({3, 4}));
  CHECK(g.coeff({2, 3}) == Rational(9, 2) * Rational(27, 6));
  CHECK(g * exp_linear(-3, 1, TruncationProfile({3, 4})) ==
        TruncatedSeries::constant(1, TruncationProfile({3, 4})));
}

TEST_CASE("inverse") {
  TruncationProfile p({3});
  auto one = TruncatedSeries::constant(1, p);
  CHECK(series_inverse(one) == one);
  auto inv = series_inverse(one - TruncatedSeries::monomial(1, {1}, p));
  for (int m = 0; m <= 3; ++m) CHECK(inv.coeff({m}) == 1);
  CHECK(series_inverse(exp_oracle(1, 7)) == exp_oracle(-1, 7));
  CHECK_THROWS_AS(series_inverse(TruncatedSeries::monomial(1, {1}, p)), Error);
  try {
    series_inverse(TruncatedSeries(p));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonInvertible);
  }
}

TEST_CASE("coefficient access outside the window is an error") {
  TruncationProfile p({1, 1});
  auto s = TruncatedSeries::constant(1, p) + TruncatedSeries::monomial(3, {1, 1}, p);
  CHECK(s.coeff({1, 1}) == 3);
  CHECK(coeff(s, {0, 1}) == 0);
  try {
    s.coeff({2, 0});
    FAIL("expected out-of-window error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfWindow);
  }
  CHECK_THROWS_AS(s + TruncatedSeries(TruncationProfile({1})), Error);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20240611);
  TruncationProfile p({3, 2});
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, p), b = random_series(rng, p), c = random_series(rng, p);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (a.constant_term() != 0) {
      CHECK(a * series_inverse(a) == TruncatedSeries::constant(1, p));
    }
  }
}

TEST_CASE("truncation coherence") {
  TruncationProfile small({2, 2}), big({4, 4});
  auto pipeline = [](const TruncationProfile& p) {
    auto x = exp_linear(2, 1, p) - exp_linear(1, 2, p);
    return series_inverse(TruncatedSeries::constant(1, p) + x) * series_pow(x, 2);
  };
  CHECK(pipeline(small) == pipeline(big).truncated(small));
}
