#pragma once

#include "polyzeta/mzv.hpp"

namespace polyzeta {

struct NumericConfig {
  double tolerance = 1e-10;
  /// Upper bound on the length of the nested sums at 1/2.
  int max_terms = 4000;
  /// Maximum bisection depth of the adaptive quadratures.
  unsigned max_levels = 20;
};

struct NumericValue {
  double value = 0.0;
  double error = 0.0;
};

/// ζ(index) by splitting its iterated integral at 1/2; both halves are
/// nested sums Σ 2^{-n_k} / ∏ n_i^{m_i}. Throws Divergence if inadmissible.
NumericValue mzv_eval(const MzvIndex& index, const NumericConfig& cfg = {});

NumericValue mzv_expr_eval(const MzvExpr& expr, const NumericConfig& cfg = {});

/// Li_k(x) for x <= 0 from Li_k(x) = x/Γ(k) ∫_0^∞ s^{k-1} / (e^s - x) ds.
NumericValue polylog_neg_axis(int k, double x, const NumericConfig& cfg = {});

/// η(k; n) = 1/Γ(n) ∫_0^∞ t^{n-1} Li_k(1 - e^t) / (1 - e^t) dt.
NumericValue eta_r1_quadrature(int k, int n, const NumericConfig& cfg = {});

}  // namespace polyzeta
