#include "polyzeta/etareduce.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "polyzeta/error.hpp"

namespace polyzeta {

std::string to_string(Branch b) { return b == Branch::Star ? "star" : "starstar"; }

Branch parse_branch(const std::string& text) {
  if (text == "star") return Branch::Star;
  if (text == "starstar") return Branch::StarStar;
  fail(ErrorKind::InvalidSpec, "branch must be 'star' or 'starstar', got '" + text + "'");
}

EtaSpec EtaSpec::star(std::vector<int> u, std::vector<int> s, Permutation sigma,
                      std::vector<int> v) {
  std::vector<int> ones(u.size(), 1);
  return EtaSpec{std::move(u), std::move(s), std::move(sigma), ones, std::move(v)};
}

EtaSpec EtaSpec::starstar(std::vector<int> u, std::vector<int> s, Permutation sigma,
                          std::vector<int> v) {
  std::vector<int> ones(u.size(), 1);
  return EtaSpec{std::move(u), std::move(s), std::move(sigma), std::move(v), ones};
}

EtaSpec EtaSpec::make(Branch branch, std::vector<int> u, std::vector<int> s, Permutation sigma,
                      std::vector<int> v) {
  return branch == Branch::Star ? star(std::move(u), std::move(s), std::move(sigma), std::move(v))
                                : starstar(std::move(u), std::move(s), std::move(sigma), std::move(v));
}

void EtaSpec::validate() const {
  const std::size_t r = u.size();
  if (r == 0) fail(ErrorKind::InvalidSpec, "depth must be at least 1");
  if (s.size() != r || sigma.size() != r || a.size() != r || b.size() != r)
    fail(ErrorKind::Dimension, "η spec vectors must all have length " + std::to_string(r));
  for (std::size_t j = 0; j < r; ++j) {
    if (u[j] < 1 || s[j] < 1)
      fail(ErrorKind::InvalidSpec, "reduction needs positive integers u and s");
    if ((a[j] != 0 && a[j] != 1) || (b[j] != 0 && b[j] != 1))
      fail(ErrorKind::Unsupported, "reduction supports offsets in {0,1} only");
  }
  const int s1 = sigma.inverse()(1);
  if (a[0] != 1 || a[s1 - 1] != 1) fail(ErrorKind::InvalidSpec, "need a_1 = a_{σ⁻¹(1)} = 1");
  if (b[0] != 1 || b[s1 - 1] != 1) fail(ErrorKind::InvalidSpec, "need b_1 = b_{σ⁻¹(1)} = 1");
  for (std::size_t j = 1; j <= r; ++j)
    if (a[sigma(static_cast<int>(j)) - 1] + b[j - 1] < 1)
      fail(ErrorKind::InvalidSpec, "need a_{σ(j)} + b_j >= 1 for j=" + std::to_string(j));
}

bool EtaSpec::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

int EtaSpec::weight() const {
  return std::accumulate(u.begin(), u.end(), 0) + std::accumulate(s.begin(), s.end(), 0);
}

std::vector<ExpansionTerm> expand_nonstrict(const std::vector<int>& u, const std::vector<int>& a) {
  const std::size_t r = u.size();
  if (a.size() != r) fail(ErrorKind::Dimension, "offset vector has wrong length");
  if (r == 0 || a[0] != 1) fail(ErrorKind::InvalidSpec, "expansion needs a_1 = 1");
  std::vector<std::size_t> optional;
  for (std::size_t j = 1; j < r; ++j) {
    if (a[j] == 0)
      optional.push_back(j);
    else if (a[j] != 1)
      fail(ErrorKind::Unsupported, "expansion supports offsets in {0,1} only");
  }
  std::map<ExpansionTerm, int> counts;
  for (unsigned mask = 0; mask < (1u << optional.size()); ++mask) {
    std::vector<bool> zeroed(r, false);
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (mask & (1u << i)) zeroed[optional[i]] = true;
    ExpansionTerm t;
    for (std::size_t j = 0; j < r; ++j) {
      if (zeroed[j]) {
        t.index.back() += u[j];
      } else {
        t.index.push_back(u[j]);
        t.positions.push_back(static_cast<int>(j + 1));
      }
    }
    ++counts[t];
  }
  std::vector<ExpansionTerm> out;
  for (const auto& [t, n] : counts)
    for (int i = 0; i < n; ++i) out.push_back(t);
  return out;
}

namespace {

// Kernel of x_i: e^{(1-a_i)T_i} dt_i / (1 - e^{T_i})^{b} in the x variables,
// with b the exponent attached to the argument z_i.
std::map<Letter, Rational> kernel(int a_i, int b_i) {
  if (a_i == 1 && b_i == 1) return {{Letter::zero(), -1}};
  if (a_i == 1 && b_i == 0) return {{Letter::one(), -1}};
  if (a_i == 0 && b_i == 1) return {{Letter::zero(), -1}, {Letter::one(), 1}};
  fail(ErrorKind::Unsupported, "offsets a_i = b = 0 give a double pole");
}

HyperlogExpr log_one_minus(int i, std::size_t r) {
  if (i > static_cast<int>(r)) return {};
  return HyperlogExpr::word(Word{{Letter::one()}, Letter::var(i)});
}

}  // namespace

Integrand build_integrand(const EtaSpec& spec) {
  spec.validate();
  const std::size_t r = spec.depth();
  Integrand out;
  out.kernels.resize(r);
  const Permutation inv = spec.sigma.inverse();
  for (std::size_t i = 1; i <= r; ++i)
    out.kernels[i - 1] = kernel(spec.a[i - 1], spec.b[inv(static_cast<int>(i)) - 1]);

  // ∏_j t_j^{s_j-1}/(s_j-1)! with t_j = I(0;1;x_{j+1}) - I(0;1;x_j).
  HyperlogExpr powers = HyperlogExpr::constant(1);
  for (std::size_t j = 1; j <= r; ++j) {
    HyperlogExpr t = log_one_minus(static_cast<int>(j + 1), r) - log_one_minus(static_cast<int>(j), r);
    HyperlogExpr p = HyperlogExpr::constant(1);
    for (int e = 1; e < spec.s[j - 1]; ++e) p = p * t;
    const Rational inv_gamma(Integer(1), factorial(static_cast<unsigned>(spec.s[j - 1] - 1)));
    powers = inv_gamma * (powers * p);
  }

  // Li^ш_{index}(z_{σ(l_1)},...,z_{σ(l_p)}) with z = -x/(1-x), reflected to
  // (-1)^{p+w} I(0; 1^{k_p-1}, x_{σ(l_p)}^-1, ..., 1^{k_1-1}, x_{σ(l_1)}^-1; 1).
  HyperlogExpr li;
  for (const auto& term : expand_nonstrict(spec.u, spec.b)) {
    Word w{{}, Letter::one()};
    int total = 0;
    for (std::size_t i = term.index.size(); i-- > 0;) {
      for (int e = 1; e < term.index[i]; ++e) w.letters.push_back(Letter::one());
      w.letters.push_back(Letter::inv(spec.sigma(term.positions[i])));
      total += term.index[i];
    }
    const bool negative = (term.index.size() + static_cast<std::size_t>(total)) % 2;
    li.add(HyperlogExpr::word(w), negative ? -1 : 1);
  }
  out.expr = li * powers;
  return out;
}

namespace {

struct ReductionMemo {
  std::mutex mutex;
  std::map<std::vector<int>, MzvExpr> table;
};

ReductionMemo& reduction_memo() {
  static ReductionMemo m;
  return m;
}

}  // namespace

MzvExpr reduce_eta(const EtaSpec& spec) {
  spec.validate();
  std::vector<int> key;
  for (const auto* v : {&spec.u, &spec.s, &spec.sigma.images(), &spec.a, &spec.b})
    key.insert(key.end(), v->begin(), v->end());
  {
    std::lock_guard lock(reduction_memo().mutex);
    auto it = reduction_memo().table.find(key);
    if (it != reduction_memo().table.end()) return it->second;
  }

  Integrand in = build_integrand(spec);
  HyperlogExpr e = in.expr;
  for (int j = static_cast<int>(spec.depth()); j >= 1; --j) {
    HyperlogExpr fibred = fibrate(e, j);
    const Letter upper = j > 1 ? Letter::var(j - 1) : Letter::one();
    HyperlogExpr next;
    for (const auto& [pole, c] : in.kernels[j - 1])
      next.add(integrate_innermost(fibred, j, pole, upper), c);
    e = std::move(next);
  }
  MzvExpr result = to_mzv(e);
  if (!result.is_zero() && result.weight() != spec.weight())
    fail(ErrorKind::Divergence, "reduction produced a non-homogeneous result");

  std::lock_guard lock(reduction_memo().mutex);
  reduction_memo().table.emplace(key, result);
  return result;
}

MzvExpr reduce_eta(Branch branch, const std::vector<int>& u, const std::vector<int>& s,
                   const Permutation& sigma, const std::vector<int>& v) {
  return reduce_eta(EtaSpec::make(branch, u, s, sigma, v));
}

MzvExpr relation_from_duality(const std::vector<int>& u, const std::vector<int>& s,
                              const Permutation& sigma, const std::vector<int>& v) {
  return reduce_eta(Branch::Star, u, s, sigma, v) -
         reduce_eta(Branch::StarStar, s, u, sigma.inverse(), v);
}

}  // namespace polyzeta
