#include "polyzeta/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyzeta/error.hpp"

namespace polyzeta {

namespace {

void require_same_variables(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.variables() != b.variables())
    fail(ErrorKind::Dimension, "series variable count mismatch: " +
                                   std::to_string(a.variables()) + " vs " +
                                   std::to_string(b.variables()));
}

// All exponents in the window, ordered by total degree then lexicographically.
std::vector<Exponent> window_exponents(const TruncationProfile& p) {
  std::vector<Exponent> out;
  Exponent e(p.variables(), 0);
  while (true) {
    out.push_back(e);
    std::size_t j = 0;
    for (; j < e.size(); ++j) {
      if (e[j] < p.order(j)) {
        ++e[j];
        break;
      }
      e[j] = 0;
    }
    if (j == e.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Exponent& x, const Exponent& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  return out;
}

}  // namespace

TruncationProfile::TruncationProfile(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_)
    if (n < 0) fail(ErrorKind::InvalidSpec, "negative truncation order");
}

TruncationProfile TruncationProfile::uniform(std::size_t variables, int order) {
  return TruncationProfile(std::vector<int>(variables, order));
}

int TruncationProfile::total_degree() const {
  return std::accumulate(orders_.begin(), orders_.end(), 0);
}

bool TruncationProfile::contains(const Exponent& e) const {
  if (e.size() != orders_.size()) return false;
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] < 0 || e[j] > orders_[j]) return false;
  return true;
}

TruncationProfile TruncationProfile::min(const TruncationProfile& other) const {
  if (other.variables() != variables())
    fail(ErrorKind::Dimension, "profile variable count mismatch");
  std::vector<int> r(orders_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::min(orders_[j], other.orders_[j]);
  return TruncationProfile(std::move(r));
}

TruncatedSeries::TruncatedSeries(TruncationProfile profile) : profile_(std::move(profile)) {}

TruncatedSeries TruncatedSeries::constant(const Rational& c, TruncationProfile profile) {
  TruncatedSeries s(std::move(profile));
  s.add_term(Exponent(s.variables(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, const Exponent& e,
                                          TruncationProfile profile) {
  if (e.size() != profile.variables())
    fail(ErrorKind::Dimension, "monomial exponent length mismatch");
  TruncatedSeries s(std::move(profile));
  s.add_term(e, c);
  return s;
}

Rational TruncatedSeries::coeff(const Exponent& e) const {
  if (e.size() != variables()) fail(ErrorKind::Dimension, "exponent length mismatch");
  if (!profile_.contains(e)) {
    std::ostringstream os;
    os << "exponent (";
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j];
    os << ") outside truncation window";
    fail(ErrorKind::OutOfWindow, os.str());
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const { return coeff(Exponent(variables(), 0)); }

int TruncatedSeries::valuation() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

void TruncatedSeries::add_term(const Exponent& e, const Rational& c) {
  if (c == 0 || !profile_.contains(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(const TruncationProfile& profile) const {
  TruncatedSeries r(profile_.min(profile));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_variables(a, b);
  TruncatedSeries r(a.profile_.min(b.profile_));
  for (const auto& [e, c] : a.terms_) r.add_term(e, c);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(profile_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_variables(a, b);
  TruncatedSeries r(a.profile_.min(b.profile_));
  Exponent e(a.variables());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      if (r.profile_.contains(e)) r.add_term(e, ca * cb);
    }
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r(a.profile_);
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, c * v);
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.variables() != b.variables()) return false;
  auto common = a.profile_.min(b.profile_);
  return a.truncated(common).terms_ == b.truncated(common).terms_;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << polyzeta::to_string(c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) os << "*t" << (j + 1) << (e[j] > 1 ? "^" + std::to_string(e[j]) : "");
  }
  return os.str();
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries exp_linear(long c, std::size_t j, const TruncationProfile& profile) {
  const std::size_t r = profile.variables();
  if (j < 1 || j > r)
    fail(ErrorKind::InvalidSpec, "exp_linear variable index out of range");
  // Restrict the window to t_j..t_r and expand the product of exponentials.
  std::vector<int> orders(r, 0);
  for (std::size_t i = j - 1; i < r; ++i) orders[i] = profile.order(i);
  TruncatedSeries s(profile);
  for (const auto& e : window_exponents(TruncationProfile(orders))) {
    Rational v = pow(Rational(c), std::accumulate(e.begin(), e.end(), 0L));
    if (v == 0) continue;
    for (int m : e) v /= Rational(factorial(static_cast<unsigned>(m)));
    s.add_term(e, v);
  }
  return s;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const Rational a0 = a.constant_term();
  if (a0 == 0) fail(ErrorKind::NonInvertible, "series has zero constant term");
  const Rational inv0 = Rational(1) / a0;
  TruncatedSeries b(a.profile());
  Exponent diff(a.variables());
  // Graded order guarantees every b_{m-e} needed below is already final.
  for (const auto& m : window_exponents(a.profile())) {
    if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) {
      b.add_term(m, inv0);
      continue;
    }
    Rational acc = 0;
    for (const auto& [e, ce] : a.terms()) {
      bool below = true, nonzero = false;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (e[j] > m[j]) below = false;
        if (e[j] != 0) nonzero = true;
        diff[j] = m[j] - e[j];
      }
      if (!below || !nonzero) continue;
      auto it = b.terms().find(diff);
      if (it != b.terms().end()) acc += ce * it->second;
    }
    b.add_term(m, -inv0 * acc);
  }
  return b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned n) {
  TruncatedSeries r = TruncatedSeries::constant(1, a.profile());
  for (unsigned i = 0; i < n; ++i) r = r * a;
  return r;
}

Rational coeff(const TruncatedSeries& a, const Exponent& e) { return a.coeff(e); }

}  // namespace polyzeta
