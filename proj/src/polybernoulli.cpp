#include "polyzeta/polybernoulli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "polyzeta/error.hpp"

namespace polyzeta {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Σ_{l_j >= lower_j} ∏ args_j^{l_j - shift_j} / ∏ (l_1+...+l_j)^{u_j}.
// Dividing the ш-polylogarithm by ∏ args_j^{shift_j} this way never needs a
// series inverse, so z_j with zero constant term can be divided out.
TruncatedSeries li_quotient(const std::vector<int>& u, const std::vector<int>& lower,
                            const std::vector<int>& shift,
                            const std::vector<TruncatedSeries>& args,
                            const TruncationProfile& profile) {
  const std::size_t r = u.size();
  if (lower.size() != r || shift.size() != r || args.size() != r)
    fail(ErrorKind::Dimension, "polylogarithm data of inconsistent depth");
  if (r == 0) fail(ErrorKind::InvalidSpec, "depth must be at least 1");
  if (lower[0] < 1) fail(ErrorKind::InvalidSpec, "first summation offset must be >= 1");

  std::vector<int> val(r);
  for (std::size_t j = 0; j < r; ++j) {
    if (args[j].variables() != profile.variables())
      fail(ErrorKind::Dimension, "argument series has wrong variable count");
    if (lower[j] < 0 || shift[j] > lower[j])
      fail(ErrorKind::InvalidSpec, "bad summation offsets");
    auto arg = args[j].truncated(profile);
    if (!arg.is_zero() && arg.constant_term() != 0)
      fail(ErrorKind::Divergence, "polylogarithm argument has nonzero constant term");
    val[j] = arg.valuation();  // -1 for the zero series
  }
  const int budget = profile.total_degree();

  // Lazily grown powers of each argument.
  std::vector<std::vector<TruncatedSeries>> powers(r);
  auto power = [&](std::size_t j, int e) -> const TruncatedSeries& {
    auto& p = powers[j];
    if (p.empty()) p.push_back(TruncatedSeries::constant(1, profile));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * args[j].truncated(profile));
    return p[e];
  };

  TruncatedSeries result(profile);
  std::function<void(std::size_t, long, int, const TruncatedSeries&, const Rational&)> walk =
      [&](std::size_t j, long partial, int degree, const TruncatedSeries& acc,
          const Rational& weight) {
        if (j == r) {
          result = result + weight * acc;
          return;
        }
        for (int l = lower[j];; ++l) {
          const int e = l - shift[j];
          if (e > 0 && val[j] < 0) break;
          const int deg = degree + e * std::max(val[j], 0);
          if (deg > budget) break;
          const long s = partial + l;
          Rational w = weight * pow(Rational(s), -u[j]);
          TruncatedSeries next = acc * power(j, e);
          if (!next.is_zero()) walk(j + 1, s, deg, next, w);
        }
      };
  walk(0, 0, 0, TruncatedSeries::constant(1, profile), Rational(1));
  return result;
}

// z_i = 1 - e^{-T_i}, i 1-based.
TruncatedSeries z_var(std::size_t i, const TruncationProfile& profile) {
  return TruncatedSeries::constant(1, profile) - exp_linear(-1, i, profile);
}

Rational factorial_weight(const Exponent& m) {
  Integer f = 1;
  for (int x : m) f *= factorial(static_cast<unsigned>(x));
  return Rational(f);
}

void check_exponent(const Exponent& m, std::size_t r) {
  if (m.size() != r) fail(ErrorKind::Dimension, "exponent length does not match depth");
  for (int x : m)
    if (x < 0) fail(ErrorKind::InvalidSpec, "negative exponent");
}

// Memo of generating series keyed by an integer encoding of the spec. Each
// entry holds the widest window computed so far; coefficients inside a
// window do not depend on how wide it is.
class SeriesCache {
 public:
  using Builder = std::function<TruncatedSeries(const TruncationProfile&)>;

  TruncatedSeries get(const std::vector<int>& key, const TruncationProfile& want,
                      const Builder& build) {
    std::optional<TruncationProfile> grow;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) {
        const auto& have = it->second.profile();
        if (covers(have, want)) return it->second;
        std::vector<int> o(want.variables());
        for (std::size_t j = 0; j < o.size(); ++j) o[j] = std::max(have.order(j), want.order(j));
        grow = TruncationProfile(std::move(o));
      }
    }
    TruncatedSeries s = build(grow ? *grow : want);
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, s);
    if (!inserted && !covers(it->second.profile(), s.profile())) it->second = s;
    return s;
  }

 private:
  static bool covers(const TruncationProfile& have, const TruncationProfile& want) {
    for (std::size_t j = 0; j < want.variables(); ++j)
      if (have.order(j) < want.order(j)) return false;
    return true;
  }

  std::mutex mutex_;
  std::map<std::vector<int>, TruncatedSeries> entries_;
};

SeriesCache& cache() {
  static SeriesCache c;
  return c;
}

TruncatedSeries c_series(const std::vector<int>& k, int d, const TruncationProfile& profile) {
  const std::size_t r = k.size();
  std::vector<int> key{1, d};
  key.insert(key.end(), k.begin(), k.end());
  return cache().get(key, profile, [&](const TruncationProfile& p) {
    std::vector<TruncatedSeries> args;
    std::vector<int> lower(r, 1), shift(r, 0);
    TruncatedSeries pre = TruncatedSeries::constant(1, p);
    for (std::size_t i = 1; i <= r; ++i) {
      args.push_back(z_var(i, p));
      // 1/(e^{T}-1) = e^{-T}/z.
      if (static_cast<int>(i) <= d) {
        shift[i - 1] = 1;
        pre = pre * exp_linear(-1, i, p);
      }
    }
    return pre * li_quotient(k, lower, shift, args, p);
  });
}

std::vector<int> merge_blocks(const std::vector<int>& v, const std::vector<int>& starts) {
  std::vector<int> out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    int end = i + 1 < starts.size() ? starts[i + 1] : static_cast<int>(v.size()) + 1;
    int s = 0;
    for (int j = starts[i]; j < end; ++j) s += v[j - 1];
    out.push_back(s);
  }
  return out;
}

}  // namespace

void BernoulliSpec::validate() const {
  const std::size_t r = k.size();
  if (r == 0) fail(ErrorKind::InvalidSpec, "depth must be at least 1");
  if (sigma.size() != r || a.size() != r || b.size() != r)
    fail(ErrorKind::Dimension, "spec vectors must all have length " + std::to_string(r));
  for (std::size_t j = 0; j < r; ++j)
    if (a[j] < 0 || b[j] < 0) fail(ErrorKind::InvalidSpec, "offsets must be non-negative");
  const int s1 = sigma.inverse()(1);
  if (a[0] < 1 || a[s1 - 1] < 1)
    fail(ErrorKind::InvalidSpec, "need a_1 >= 1 and a_{σ⁻¹(1)} >= 1 (a=" + join(a) + ")");
  if (b[0] < 1 || b[s1 - 1] < 1)
    fail(ErrorKind::InvalidSpec, "need b_1 >= 1 and b_{σ⁻¹(1)} >= 1 (b=" + join(b) + ")");
  for (std::size_t j = 1; j <= r; ++j)
    if (a[sigma(static_cast<int>(j)) - 1] + b[j - 1] < 1)
      fail(ErrorKind::InvalidSpec, "need a_{σ(j)} + b_j >= 1 for j=" + std::to_string(j));
}

bool BernoulliSpec::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

TruncatedSeries li_sha_series(const std::vector<int>& u, const std::vector<int>& b,
                              const std::vector<TruncatedSeries>& args,
                              const TruncationProfile& profile) {
  return li_quotient(u, b, std::vector<int>(u.size(), 0), args, profile);
}

TruncatedSeries bernoulli_series(const BernoulliSpec& spec, const TruncationProfile& profile) {
  spec.validate();
  const std::size_t r = spec.depth();
  if (profile.variables() != r) fail(ErrorKind::Dimension, "profile does not match depth");
  std::vector<int> key{0};
  for (const auto* v : {&spec.k, &spec.sigma.images(), &spec.a, &spec.b})
    key.insert(key.end(), v->begin(), v->end());
  return cache().get(key, profile, [&](const TruncationProfile& p) {
    TruncatedSeries pre = TruncatedSeries::constant(1, p);
    for (std::size_t j = 1; j <= r; ++j)
      if (spec.a[j - 1] != 1) pre = pre * exp_linear(spec.a[j - 1] - 1, j, p);
    std::vector<TruncatedSeries> args;
    for (std::size_t j = 1; j <= r; ++j)
      args.push_back(z_var(static_cast<std::size_t>(spec.sigma(static_cast<int>(j))), p));
    return pre * li_quotient(spec.k, spec.b, spec.b, args, p);
  });
}

Rational bnum(const BernoulliSpec& spec, const Exponent& m) {
  check_exponent(m, spec.depth());
  return factorial_weight(m) * bernoulli_series(spec, TruncationProfile(m)).coeff(m);
}

Rational cnum(const std::vector<int>& k, int d, const Exponent& m) {
  const std::size_t r = k.size();
  if (r == 0) fail(ErrorKind::InvalidSpec, "depth must be at least 1");
  if (d < 1 || d > static_cast<int>(r))
    fail(ErrorKind::InvalidSpec, "d must lie in 1.." + std::to_string(r));
  check_exponent(m, r);
  return factorial_weight(m) * c_series(k, d, TruncationProfile(m)).coeff(m);
}

Rational star_num(const std::vector<int>& u, const Exponent& m) {
  const std::size_t r = u.size();
  std::vector<int> b(r, 0);
  if (r > 0) b[0] = 1;
  return bnum(BernoulliSpec{u, Permutation::identity(r), std::vector<int>(r, 1), b}, m);
}

IdentityCheck duality_check(const std::vector<int>& k, const Exponent& n,
                            const Permutation& sigma, const std::vector<int>& a,
                            const std::vector<int>& b) {
  auto neg = [](const std::vector<int>& v) {
    std::vector<int> w(v);
    for (int& x : w) x = -x;
    return w;
  };
  for (int x : k)
    if (x < 0) fail(ErrorKind::InvalidSpec, "duality indices must be non-negative");
  BernoulliSpec left{neg(k), sigma, a, b};
  BernoulliSpec right{neg(n), sigma.inverse(), b, a};
  left.validate();
  right.validate();
  IdentityCheck c;
  c.lhs = bnum(left, n);
  c.rhs = bnum(right, k);
  c.equal = c.lhs == c.rhs;
  return c;
}

DualityScanReport duality_scan(std::size_t r, int max) {
  if (r == 0) fail(ErrorKind::InvalidSpec, "scan depth must be at least 1");
  if (max < 0) fail(ErrorKind::InvalidSpec, "scan bound must be non-negative");
  const int base = max + 1;
  int tuples = 1;
  for (std::size_t j = 0; j < r; ++j) tuples *= base;
  auto digits = [&](int code) {
    std::vector<int> v(r);
    for (std::size_t j = 0; j < r; ++j, code /= base) v[j] = code % base;
    return v;
  };

  DualityScanReport report;
  for (const auto& sigma : Permutation::all(r)) {
    for (unsigned am = 0; am < (1u << r); ++am) {
      for (unsigned bm = 0; bm < (1u << r); ++bm) {
        std::vector<int> a(r), b(r);
        for (std::size_t j = 0; j < r; ++j) {
          a[j] = static_cast<int>((am >> j) & 1);
          b[j] = static_cast<int>((bm >> j) & 1);
        }
        if (!BernoulliSpec{std::vector<int>(r, 0), sigma, a, b}.is_valid() ||
            !BernoulliSpec{std::vector<int>(r, 0), sigma.inverse(), b, a}.is_valid())
          continue;
        for (int kc = 0; kc < tuples; ++kc) {
          const auto k = digits(kc);
          for (int nc = 0; nc < tuples; ++nc) {
            const auto n = digits(nc);
            auto c = duality_check(k, n, sigma, a, b);
            ++report.checked;
            if (!c.equal) report.failures.push_back({k, n, sigma, a, b, std::move(c)});
          }
        }
      }
    }
  }
  return report;
}

IdentityCheck cnum_duality_check(const std::vector<int>& k, const Exponent& n) {
  const std::size_t r = k.size();
  check_exponent(n, r);
  check_exponent(k, r);
  std::vector<int> upper(r), dual(r);
  for (std::size_t j = 0; j < r; ++j) {
    upper[j] = -k[j];
    dual[j] = -n[j];
  }
  upper[0] -= 1;
  dual[0] -= 1;
  IdentityCheck c;
  c.lhs = cnum(upper, static_cast<int>(r), n);
  c.rhs = 0;
  // Block starts 1 = b_1 < ... < b_a <= r, one bit per position 2..r.
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    std::vector<int> starts{1};
    for (std::size_t j = 2; j <= r; ++j)
      if (mask & (1u << (j - 2))) starts.push_back(static_cast<int>(j));
    c.rhs += cnum(merge_blocks(dual, starts), 1, merge_blocks(k, starts));
  }
  c.equal = c.lhs == c.rhs;
  return c;
}

IdentityCheck star_identity_check(const std::vector<int>& k, const Exponent& n) {
  const std::size_t r = k.size();
  check_exponent(n, r);
  check_exponent(k, r);
  std::vector<int> negk(r), negn(r), b(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    negk[j] = -k[j];
    negn[j] = -n[j];
  }
  b[0] = 1;
  IdentityCheck c;
  c.lhs = bnum(BernoulliSpec{negk, Permutation::identity(r), std::vector<int>(r, 1), b}, n);
  c.rhs = 0;
  Exponent m(r, 0);
  while (true) {
    Integer coef = 1;
    Exponent rest(r);
    for (std::size_t j = 0; j < r; ++j) {
      coef *= binomial(static_cast<unsigned>(k[j]), static_cast<unsigned>(m[j]));
      rest[j] = k[j] - m[j];
    }
    c.rhs += Rational(coef) * cnum(negn, static_cast<int>(r), rest);
    std::size_t j = 0;
    for (; j < r; ++j) {
      if (m[j] < k[j]) {
        ++m[j];
        break;
      }
      m[j] = 0;
    }
    if (j == r) break;
  }
  c.equal = c.lhs == c.rhs;
  return c;
}

Rational eta_nonpositive(const std::vector<int>& u, const std::vector<int>& s,
                         const Permutation& sigma, const std::vector<int>& a,
                         const std::vector<int>& b) {
  Exponent n(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] > 0)
      fail(ErrorKind::InvalidSpec,
           "s has a positive component; positive points go through the MZV reduction");
    n[j] = -s[j];
  }
  return bnum(BernoulliSpec{u, sigma, a, b}, n);
}

}  // namespace polyzeta
