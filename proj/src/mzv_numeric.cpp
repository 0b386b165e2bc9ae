#include "polyzeta/mzv_numeric.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "polyzeta/error.hpp"

namespace polyzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// I(0; w; 1/2) for a {0,1} word starting with 1, via the nested sum
// (-1)^k Σ_{0<n_1<...<n_k} 2^{-n_k} / ∏ n_i^{m_i}, blocks (1, 0^{m_i-1}).
NumericValue word_at_half(const std::vector<int>& w, const NumericConfig& cfg) {
  if (w.empty()) return {1.0, 0.0};
  std::vector<int> m;
  for (int l : w) {
    if (l == 1)
      m.push_back(1);
    else
      ++m.back();
  }
  const std::size_t k = m.size();
  std::vector<double> prefix(k + 1, 0.0);  // prefix[j] = Σ_{n'<n} a_j(n')
  prefix[0] = 1.0;
  double sum = 0.0, pw = 1.0, tail = 0.0;
  for (int n = 1; n <= cfg.max_terms; ++n) {
    pw *= 0.5;
    // a_1(n) = 1/n^{m_1}; a_j(n) = prefix[j-1](n) / n^{m_j}.
    std::vector<double> a(k + 1, 0.0);
    for (std::size_t j = 1; j <= k; ++j) {
      const double base = j == 1 ? 1.0 : prefix[j - 1];
      a[j] = base / std::pow(static_cast<double>(n), m[j - 1]);
    }
    for (std::size_t j = 1; j <= k; ++j) prefix[j] += a[j];
    const double term = a[k] * pw;
    sum += term;
    // a_k(n') <= prefix[k-1] grows at most like H^{k-1}; for n' > n the
    // remaining terms are bounded by a geometric series with ratio 1/2.
    const double bound = (k == 1 ? 1.0 : prefix[k - 1]) * pw;
    if (n > 10 && bound < cfg.tolerance * 1e-6) {
      tail = bound;
      break;
    }
    tail = bound;
  }
  const double sign = k % 2 ? -1.0 : 1.0;
  return {sign * sum, tail + 8 * kEps * std::abs(sum)};
}

}  // namespace

NumericValue mzv_eval(const MzvIndex& index, const NumericConfig& cfg) {
  if (!is_admissible(index))
    fail(ErrorKind::Divergence, "inadmissible MZV index " + mzv_to_string(index));
  std::vector<int> w;
  for (int k : index) {
    w.push_back(1);
    for (int i = 1; i < k; ++i) w.push_back(0);
  }
  const std::size_t n = w.size();
  // I(0;w;1) = Σ_i I(0;w_1..w_i;1/2) · (-1)^{n-i} I(0;1-w_n,...,1-w_{i+1};1/2).
  NumericValue total;
  double magnitude = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<int> head(w.begin(), w.begin() + static_cast<long>(i));
    std::vector<int> tail;
    for (std::size_t j = n; j > i; --j) tail.push_back(1 - w[j - 1]);
    NumericValue f = word_at_half(head, cfg), g = word_at_half(tail, cfg);
    const double sign = (n - i) % 2 ? -1.0 : 1.0;
    total.value += sign * f.value * g.value;
    total.error += std::abs(f.value) * g.error + std::abs(g.value) * f.error;
    magnitude += std::abs(f.value * g.value);
  }
  if (index.size() % 2) total.value = -total.value;
  total.error += 16 * kEps * magnitude;
  return total;
}

NumericValue mzv_expr_eval(const MzvExpr& expr, const NumericConfig& cfg) {
  NumericValue total;
  for (const auto& [idx, c] : expr.terms()) {
    NumericValue z = mzv_eval(idx, cfg);
    const double cd = c.get_d();
    total.value += cd * z.value;
    total.error += std::abs(cd) * z.error + kEps * std::abs(cd * z.value);
  }
  return total;
}

NumericValue polylog_neg_axis(int k, double x, const NumericConfig& cfg) {
  if (k < 1) fail(ErrorKind::InvalidSpec, "polylog order must be >= 1");
  if (x > 0) fail(ErrorKind::InvalidSpec, "polylog_neg_axis needs x <= 0");
  if (x == 0) return {0.0, 0.0};
  if (k == 1) {
    const double v = -std::log1p(-x);
    return {v, 4 * kEps * std::abs(v)};
  }
  // The integrand s^{k-1}/(e^s - x) turns over near s = log(1 - x); split there.
  const double knee = std::log1p(-x) + k;
  auto f = [&](double s) {
    if (s > 745) return 0.0;
    const double decay = std::exp(-s);
    return std::pow(s, k - 1) * decay / (1.0 - x * decay);
  };
  double err1 = 0, err2 = 0;
  const double tol = std::min(1e-13, cfg.tolerance * 1e-3);
  const double part1 = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, knee, cfg.max_levels, tol, &err1);
  boost::math::quadrature::exp_sinh<double> tail_rule;
  auto shifted = [&](double u) { return f(u + knee); };
  const double part2 = tail_rule.integrate(shifted, tol, &err2);
  const double scale = x / std::tgamma(static_cast<double>(k));
  const double v = scale * (part1 + part2);
  return {v, std::abs(scale) * (err1 + err2) + 8 * kEps * std::abs(v)};
}

NumericValue eta_r1_quadrature(int k, int n, const NumericConfig& cfg) {
  if (k < 1 || n < 1) fail(ErrorKind::InvalidSpec, "η quadrature needs k, n >= 1");
  const double inv_gamma = 1.0 / std::tgamma(static_cast<double>(n));
  NumericConfig inner = cfg;
  inner.tolerance = std::min(cfg.tolerance, 1e-12);
  double inner_error = 0.0;
  auto f = [&](double t) {
    if (t < 1e-12) return n == 1 ? inv_gamma : 0.0;  // Li_k(u)/u -> 1 as u -> 0
    if (t > 700) return 0.0;  // below t^{n+k} e^{-t}, far under any tolerance
    const double u = -std::expm1(t);
    NumericValue li = polylog_neg_axis(k, u, inner);
    inner_error = std::max(inner_error, std::abs(li.error / u));
    return inv_gamma * std::pow(t, n - 1) * li.value / u;
  };
  double err1 = 0, err2 = 0;
  const double tol = std::min(1e-12, cfg.tolerance);
  const double split = 4.0 + n + k;
  const double part1 = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, split, cfg.max_levels, tol, &err1);
  boost::math::quadrature::exp_sinh<double> tail_rule;
  const double part2 =
      tail_rule.integrate([&](double s) { return f(s + split); }, tol, &err2);
  const double v = part1 + part2;
  return {v, err1 + err2 + inner_error * (split + 10) + 8 * kEps * std::abs(v)};
}

}  // namespace polyzeta
