#include "polyzeta/mzv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "polyzeta/error.hpp"

namespace polyzeta {

bool is_admissible(const MzvIndex& index) {
  if (index.empty() || index.back() < 2) return false;
  return std::all_of(index.begin(), index.end(), [](int m) { return m >= 1; });
}

int weight(const MzvIndex& index) { return std::accumulate(index.begin(), index.end(), 0); }

std::string mzv_to_string(const MzvIndex& index) {
  std::string s = "ζ(";
  for (std::size_t i = 0; i < index.size(); ++i) s += (i ? "," : "") + std::to_string(index[i]);
  return s + ")";
}

bool MzvOrder::operator()(const MzvIndex& x, const MzvIndex& y) const {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::vector<MzvIndex> admissible_indices(int w) {
  std::vector<MzvIndex> out;
  MzvIndex cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (is_admissible(cur)) out.push_back(cur);
      return;
    }
    for (int m = 1; m <= left; ++m) {
      cur.push_back(m);
      rec(left - m);
      cur.pop_back();
    }
  };
  if (w >= 2) rec(w);
  std::sort(out.begin(), out.end(), MzvOrder{});
  return out;
}

MzvExpr MzvExpr::single(const MzvIndex& index, const Rational& c) {
  MzvExpr e;
  e.add(index, c);
  return e;
}

void MzvExpr::add(const MzvIndex& index, const Rational& c) {
  if (!is_admissible(index))
    fail(ErrorKind::InvalidSpec, "inadmissible MZV index " + mzv_to_string(index));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MzvExpr::coeff(const MzvIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MzvExpr::weight() const {
  int w = -1;
  for (const auto& [idx, c] : terms_) {
    int v = polyzeta::weight(idx);
    if (w >= 0 && v != w) return -1;
    w = v;
  }
  return w;
}

bool MzvExpr::is_homogeneous() const { return is_zero() || weight() >= 0; }

MzvExpr MzvExpr::operator+(const MzvExpr& o) const {
  MzvExpr r = *this;
  for (const auto& [idx, c] : o.terms_) r.add(idx, c);
  return r;
}

MzvExpr MzvExpr::operator-() const { return Rational(-1) * *this; }

MzvExpr MzvExpr::operator-(const MzvExpr& o) const { return *this + (-o); }

MzvExpr operator*(const Rational& c, const MzvExpr& e) {
  MzvExpr r;
  if (c == 0) return r;
  for (const auto& [idx, v] : e.terms_) r.terms_.emplace(idx, c * v);
  return r;
}

std::string MzvExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += mag.get_str();
    s += mzv_to_string(idx);
  }
  return s;
}

}  // namespace polyzeta
