#include <cmath>
#include <limits>

#include "polyzeta/error.hpp"
#include "polyzeta/hyperlog.hpp"

namespace polyzeta {

namespace {

constexpr int kMaxTerms = 400;
constexpr double kTermTol = 1e-20;

// Carries the prefix values F_k(t) = I(0; a_1..a_k; t), F_0 = 1, from t = from
// to t = to by Taylor steps. Each step stays within half the distance to the
// nearest singular letter, so the series converge at least like 2^-m.
void propagate(const std::vector<double>& a, std::vector<double>& F, double from, double to) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> f(n + 1, std::vector<double>(kMaxTerms + 1, 0.0));
  double c = from;
  while (c < to) {
    double radius = std::numeric_limits<double>::infinity();
    for (double l : a) {
      if (c == 0.0 && l == 0.0) continue;  // regular singular point, handled exactly
      radius = std::min(radius, std::abs(c - l));
    }
    const double h = std::min(to - c, radius / 2);
    for (std::size_t k = 0; k <= n; ++k) {
      std::fill(f[k].begin(), f[k].end(), 0.0);
      f[k][0] = F[k];
    }
    std::vector<double> next(F);
    double hp = 1.0, scale = 0.0;
    for (double v : F) scale = std::max(scale, std::abs(v));
    scale = std::max(scale, 1.0);
    for (int m = 0; m < kMaxTerms; ++m) {
      for (std::size_t k = 1; k <= n; ++k) {
        const double d = c - a[k - 1];
        if (d == 0.0)
          f[k][m + 1] = f[k - 1][m + 1] / (m + 1);
        else
          f[k][m + 1] = (f[k - 1][m] - m * f[k][m]) / ((m + 1) * d);
      }
      hp *= h;
      double biggest = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        next[k] += f[k][m + 1] * hp;
        biggest = std::max(biggest, std::abs(f[k][m + 1] * hp));
      }
      if (m > 8 && biggest < kTermTol * scale) break;
    }
    F = next;
    c += h;
    if (h <= 0) fail(ErrorKind::Divergence, "numeric path hit a singular letter");
  }
}

}  // namespace

double iterated_integral(const std::vector<double>& letters, double upper) {
  const std::size_t n = letters.size();
  if (n == 0) return 1.0;
  if (!(upper > 0)) fail(ErrorKind::InvalidSpec, "upper limit must be positive");
  if (letters.front() == 0.0) fail(ErrorKind::Divergence, "word diverges at its lower limit");
  if (letters.back() == upper) fail(ErrorKind::Divergence, "word diverges at its upper limit");
  for (double l : letters)
    if (l > 0 && l < upper)
      fail(ErrorKind::Unsupported, "letter lies inside the integration path");

  // Split at the midpoint; the far half is evaluated on the reflected word
  // I(p; a_{k+1..n}; X) = (-1)^{n-k} I(0; X-a_n, ..., X-a_{k+1}; X-p).
  const double p = upper / 2;
  std::vector<double> F(n + 1, 0.0);
  F[0] = 1.0;
  propagate(letters, F, 0.0, p);
  std::vector<double> refl(n);
  for (std::size_t j = 0; j < n; ++j) refl[j] = upper - letters[n - 1 - j];
  std::vector<double> G(n + 1, 0.0);
  G[0] = 1.0;
  propagate(refl, G, 0.0, upper - p);
  double total = 0.0;
  for (std::size_t k = 0; k <= n; ++k) total += F[k] * ((n - k) % 2 ? -G[n - k] : G[n - k]);
  return total;
}

double word_eval_numeric(const Word& w, const std::vector<double>& x) {
  std::vector<double> letters;
  letters.reserve(w.letters.size());
  for (const auto& l : w.letters) letters.push_back(l.value(x));
  return iterated_integral(letters, w.upper.value(x));
}

double expr_eval_numeric(const HyperlogExpr& e, const std::vector<double>& x) {
  double total = 0.0;
  for (const auto& [k, c] : e.terms()) {
    double v = c.get_d();
    for (const auto& z : k.zeta) {
      std::vector<double> letters;
      for (const auto& l : mzv_letters(z)) letters.push_back(l.value(x));
      const double zv = iterated_integral(letters, 1.0);
      v *= z.size() % 2 ? -zv : zv;
    }
    for (const auto& w : k.words) v *= word_eval_numeric(w, x);
    total += v;
  }
  return total;
}

double poles_eval_numeric(const PoleExpansion& d, int j, const std::vector<double>& x) {
  const double xj = Letter::var(j).value(x);
  double total = 0.0;
  for (const auto& [pole, e] : d) total += expr_eval_numeric(e, x) / (xj - pole.value(x));
  return total;
}

bool scale_invariance_check(const Word& w, double c, const std::vector<double>& x, double tol) {
  if (!(c > 0)) fail(ErrorKind::InvalidSpec, "scale factor must be positive");
  std::vector<double> letters, scaled;
  for (const auto& l : w.letters) {
    letters.push_back(l.value(x));
    scaled.push_back(c * l.value(x));
  }
  const double upper = w.upper.value(x);
  return std::abs(iterated_integral(letters, upper) - iterated_integral(scaled, c * upper)) <= tol;
}

}  // namespace polyzeta
