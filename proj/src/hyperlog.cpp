#include "polyzeta/hyperlog.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "polyzeta/error.hpp"

namespace polyzeta {

// ---- letters and words ---------------------------------------------------

Letter Letter::var(int j) {
  if (j < 1) fail(ErrorKind::InvalidSpec, "variable index must be >= 1");
  return {Kind::Var, j};
}

Letter Letter::inv(int j) {
  if (j < 1) fail(ErrorKind::InvalidSpec, "variable index must be >= 1");
  return {Kind::InvVar, j};
}

double Letter::value(const std::vector<double>& x) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::One:
      return 1.0;
    case Kind::Var:
    case Kind::InvVar:
      if (index > static_cast<int>(x.size()))
        fail(ErrorKind::InvalidSpec, "no value assigned to x" + std::to_string(index));
      return kind == Kind::Var ? x[index - 1] : 1.0 / x[index - 1];
  }
  return 0.0;
}

std::string Letter::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Var:
      return "x" + std::to_string(index);
    case Kind::InvVar:
      return "x" + std::to_string(index) + "^-1";
  }
  return "?";
}

bool Word::depends_on(int j) const {
  if (upper.involves(j)) return true;
  return std::any_of(letters.begin(), letters.end(), [j](const Letter& l) { return l.involves(j); });
}

std::string Word::to_string() const {
  std::string s = "I(0; ";
  for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + letters[i].to_string();
  return s + "; " + upper.to_string() + ")";
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Letter parse_letter(const std::string& t) {
  if (t == "0") return Letter::zero();
  if (t == "1") return Letter::one();
  if (t.size() >= 2 && t[0] == 'x') {
    std::string body = t.substr(1);
    bool inverse = false;
    if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      body.resize(body.size() - 3);
    }
    if (!body.empty() && body[0] != '0' &&
        std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int j = std::stoi(body);
      return inverse ? Letter::inv(j) : Letter::var(j);
    }
  }
  fail(ErrorKind::InvalidSpec, "malformed letter '" + t + "'");
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::string s = trim(text);
  auto bad = [&]() { fail(ErrorKind::InvalidSpec, "malformed word '" + s + "'"); };
  if (s.size() < 4 || s.rfind("I(", 0) != 0 || s.back() != ')') bad();
  std::string body = s.substr(2, s.size() - 3);
  auto p1 = body.find(';');
  auto p2 = body.find(';', p1 == std::string::npos ? 0 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos || body.find(';', p2 + 1) != std::string::npos)
    bad();
  if (trim(body.substr(0, p1)) != "0") bad();
  Word w;
  std::string mid = trim(body.substr(p1 + 1, p2 - p1 - 1));
  if (!mid.empty()) {
    std::stringstream ss(mid);
    std::string item;
    while (std::getline(ss, item, ',')) w.letters.push_back(parse_letter(trim(item)));
    if (mid.back() == ',') bad();
  }
  w.upper = parse_letter(trim(body.substr(p2 + 1)));
  if (w.upper.kind != Letter::Kind::One && w.upper.kind != Letter::Kind::Var) bad();
  return w;
}

// ---- expressions ---------------------------------------------------------

HyperlogExpr HyperlogExpr::constant(const Rational& c) {
  HyperlogExpr e;
  e.add(TermKey{}, c);
  return e;
}

HyperlogExpr HyperlogExpr::word(const Word& w, const Rational& c) {
  HyperlogExpr e;
  if (w.empty())
    e.add(TermKey{}, c);
  else
    e.add(TermKey{{}, {w}}, c);
  return e;
}

HyperlogExpr HyperlogExpr::zeta(const MzvIndex& index, const Rational& c) {
  if (!is_admissible(index))
    fail(ErrorKind::InvalidSpec, "inadmissible MZV index " + mzv_to_string(index));
  HyperlogExpr e;
  e.add(TermKey{{index}, {}}, c);
  return e;
}

void HyperlogExpr::add(TermKey key, const Rational& c) {
  if (c == 0) return;
  std::sort(key.zeta.begin(), key.zeta.end());
  std::sort(key.words.begin(), key.words.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void HyperlogExpr::add(const HyperlogExpr& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [k, c] : other.terms_) add(k, scale * c);
}

HyperlogExpr HyperlogExpr::operator+(const HyperlogExpr& o) const {
  HyperlogExpr r = *this;
  r.add(o);
  return r;
}

HyperlogExpr HyperlogExpr::operator-(const HyperlogExpr& o) const {
  HyperlogExpr r = *this;
  r.add(o, -1);
  return r;
}

HyperlogExpr HyperlogExpr::operator*(const HyperlogExpr& o) const {
  HyperlogExpr r;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      TermKey k = k1;
      k.zeta.insert(k.zeta.end(), k2.zeta.begin(), k2.zeta.end());
      k.words.insert(k.words.end(), k2.words.begin(), k2.words.end());
      r.add(std::move(k), c1 * c2);
    }
  }
  return r;
}

HyperlogExpr operator*(const Rational& c, const HyperlogExpr& e) {
  HyperlogExpr r;
  r.add(e, c);
  return r;
}

std::string HyperlogExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (const auto& z : k.zeta) factors.push_back(mzv_to_string(z));
    for (const auto& w : k.words) factors.push_back(w.to_string());
    if (mag != 1 || factors.empty()) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
  }
  return s;
}

// ---- shuffle -------------------------------------------------------------

std::map<std::vector<Letter>, Integer> shuffle_letters(const std::vector<Letter>& u,
                                                       const std::vector<Letter>& v) {
  std::map<std::vector<Letter>, Integer> out;
  std::vector<Letter> cur;
  cur.reserve(u.size() + v.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == u.size() && j == v.size()) {
      out[cur] += 1;
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

HyperlogExpr shuffle(const Word& w1, const Word& w2) {
  if (w1.upper != w2.upper)
    fail(ErrorKind::InvalidSpec, "cannot shuffle " + w1.to_string() + " with " + w2.to_string() +
                                     ": upper limits differ");
  HyperlogExpr r;
  for (const auto& [letters, n] : shuffle_letters(w1.letters, w2.letters))
    r.add(HyperlogExpr::word(Word{letters, w1.upper}), Rational(n));
  return r;
}

// ---- canonical forms -----------------------------------------------------

std::vector<Letter> mzv_letters(const MzvIndex& index) {
  std::vector<Letter> out;
  for (int k : index) {
    out.push_back(Letter::one());
    for (int i = 1; i < k; ++i) out.push_back(Letter::zero());
  }
  return out;
}

MzvExpr word_to_mzv(const Word& w) {
  if (w.upper.kind != Letter::Kind::One)
    fail(ErrorKind::InvalidSpec, "word_to_mzv needs upper limit 1: " + w.to_string());
  if (w.empty()) fail(ErrorKind::InvalidSpec, "empty word has no MZV");
  for (const auto& l : w.letters)
    if (!l.is_constant()) fail(ErrorKind::InvalidSpec, "word is not over {0,1}: " + w.to_string());
  if (w.letters.front().kind != Letter::Kind::One || w.letters.back().kind != Letter::Kind::Zero)
    fail(ErrorKind::Divergence, "divergent word " + w.to_string());
  MzvIndex index;
  for (const auto& l : w.letters) {
    if (l.kind == Letter::Kind::One)
      index.push_back(1);
    else
      ++index.back();
  }
  return MzvExpr::single(index, index.size() % 2 ? -1 : 1);
}

namespace {

void require_convergent(const Word& w) {
  if (w.empty()) return;
  if (w.letters.front().kind == Letter::Kind::Zero)
    fail(ErrorKind::Divergence, "word starts at its lower limit: " + w.to_string());
  if (w.letters.back() == w.upper)
    fail(ErrorKind::Divergence, "word ends at its upper limit: " + w.to_string());
}

HyperlogExpr zeta_word_value(const Word& w) {
  HyperlogExpr e;
  const MzvExpr value = word_to_mzv(w);
  for (const auto& [idx, c] : value.terms()) e.add(TermKey{{idx}, {}}, c);
  return e;
}

}  // namespace

HyperlogExpr canonical(const Word& w) {
  if (w.empty()) return HyperlogExpr::constant(1);
  require_convergent(w);
  std::set<int> vars, inv_vars;
  for (const auto& l : w.letters) {
    if (l.kind == Letter::Kind::Var) vars.insert(l.index);
    if (l.kind == Letter::Kind::InvVar) inv_vars.insert(l.index);
  }
  if (w.upper.kind == Letter::Kind::One) {
    if (vars.empty() && inv_vars.empty()) return zeta_word_value(w);
    if (vars.empty() && inv_vars.size() == 1) {
      // I(0; a; 1) = I(0; x_i a; x_i).
      const int i = *inv_vars.begin();
      Word s{{}, Letter::var(i)};
      for (const auto& l : w.letters) {
        if (l.kind == Letter::Kind::Zero)
          s.letters.push_back(l);
        else if (l.kind == Letter::Kind::One)
          s.letters.push_back(Letter::var(i));
        else
          s.letters.push_back(Letter::one());
      }
      return canonical(s);
    }
    return HyperlogExpr::word(w);
  }
  const int i = w.upper.index;
  bool scale_free = inv_vars.empty() && std::all_of(w.letters.begin(), w.letters.end(), [i](const Letter& l) {
    return l.kind == Letter::Kind::Zero || (l.kind == Letter::Kind::Var && l.index == i);
  });
  if (scale_free) {
    Word s{{}, Letter::one()};
    for (const auto& l : w.letters) s.letters.push_back(l.kind == Letter::Kind::Zero ? l : Letter::one());
    return zeta_word_value(s);
  }
  return HyperlogExpr::word(w);
}

HyperlogExpr canonical(const HyperlogExpr& e) {
  HyperlogExpr out;
  for (const auto& [k, c] : e.terms()) {
    HyperlogExpr t;
    t.add(TermKey{k.zeta, {}}, c);
    for (const auto& w : k.words) t = t * canonical(w);
    out.add(t);
  }
  return out;
}

// ---- differentiation -----------------------------------------------------

namespace {

using PoleCoeffs = std::map<Letter, Rational>;

void add_pole(PoleCoeffs& m, const Letter& pole, const Rational& c) {
  auto& v = m[pole];
  v += c;
  if (v == 0) m.erase(pole);
}

// ∂/∂x_j log(p - q) as Σ c / (x_j - pole).
PoleCoeffs dlog_difference(const Letter& p, const Letter& q, int j) {
  PoleCoeffs out;
  if (p == q) return out;
  const bool pj = p.involves(j), qj = q.involves(j);
  if (!pj && !qj) return out;
  if (pj && qj)
    fail(ErrorKind::Unsupported, "letters " + p.to_string() + " and " + q.to_string() +
                                     " give a non-linear pole in x" + std::to_string(j));
  const Letter& moving = pj ? p : q;
  const Letter& fixed = pj ? q : p;
  if (moving.kind == Letter::Kind::Var) {
    if (fixed.kind == Letter::Kind::InvVar)
      fail(ErrorKind::Unsupported, "pole at " + fixed.to_string() + " is outside the alphabet");
    add_pole(out, fixed, 1);
    return out;
  }
  // log(1/x - c) = log(1 - c x) - log x.
  add_pole(out, Letter::zero(), -1);
  switch (fixed.kind) {
    case Letter::Kind::Zero:
      break;
    case Letter::Kind::One:
      add_pole(out, Letter::one(), 1);
      break;
    case Letter::Kind::InvVar:
      add_pole(out, Letter::var(fixed.index), 1);
      break;
    case Letter::Kind::Var:
      fail(ErrorKind::Unsupported, "pole at 1/" + fixed.to_string() + " is outside the alphabet");
  }
  return out;
}

void add_expansion(PoleExpansion& into, const PoleExpansion& from, const HyperlogExpr& factor) {
  for (const auto& [pole, e] : from) {
    auto& slot = into[pole];
    slot.add(e * factor);
    if (slot.is_zero()) into.erase(pole);
  }
}

}  // namespace

PoleExpansion diff_word(const Word& w, int j) {
  PoleExpansion out;
  if (!w.depends_on(j)) return out;
  const std::size_t n = w.letters.size();
  auto at = [&](std::size_t k) -> Letter {
    if (k == 0) return Letter::zero();
    if (k == n + 1) return w.upper;
    return w.letters[k - 1];
  };
  for (std::size_t k = 1; k <= n; ++k) {
    PoleCoeffs eps = dlog_difference(at(k + 1), at(k), j);
    for (const auto& [pole, c] : dlog_difference(at(k), at(k - 1), j)) add_pole(eps, pole, -c);
    if (eps.empty()) continue;
    Word shorter = w;
    shorter.letters.erase(shorter.letters.begin() + static_cast<long>(k - 1));
    HyperlogExpr base = canonical(shorter);
    for (const auto& [pole, c] : eps) {
      auto& slot = out[pole];
      slot.add(base, c);
      if (slot.is_zero()) out.erase(pole);
    }
  }
  return out;
}

PoleExpansion diff_wrt_var(const HyperlogExpr& expr, int j) {
  PoleExpansion out;
  for (const auto& [k, c] : expr.terms()) {
    for (std::size_t i = 0; i < k.words.size(); ++i) {
      if (!k.words[i].depends_on(j)) continue;
      HyperlogExpr rest;
      TermKey others{k.zeta, {}};
      for (std::size_t m = 0; m < k.words.size(); ++m)
        if (m != i) others.words.push_back(k.words[m]);
      rest.add(others, c);
      add_expansion(out, diff_word(k.words[i], j), rest);
    }
  }
  return out;
}

// ---- variable removal ----------------------------------------------------

namespace {

bool is_target(const Word& w, int j) {
  if (w.upper != Letter::var(j)) return false;
  return std::all_of(w.letters.begin(), w.letters.end(), [j](const Letter& l) {
    return l.is_constant() || (l.kind == Letter::Kind::Var && l.index < j);
  });
}

// Merge all words with upper limit `upper` in every term into one word.
HyperlogExpr merge_upper(const HyperlogExpr& e, const Letter& upper) {
  HyperlogExpr out;
  for (const auto& [k, c] : e.terms()) {
    std::vector<Word> same;
    TermKey rest{k.zeta, {}};
    for (const auto& w : k.words) (w.upper == upper ? same : rest.words).push_back(w);
    if (same.size() <= 1) {
      out.add(k, c);
      continue;
    }
    HyperlogExpr acc = HyperlogExpr::word(same[0]);
    for (std::size_t i = 1; i < same.size(); ++i) {
      HyperlogExpr next;
      for (const auto& [ak, ac] : acc.terms()) {
        for (const auto& [letters, mult] : shuffle_letters(ak.words.at(0).letters, same[i].letters))
          next.add(TermKey{{}, {Word{letters, upper}}}, ac * Rational(mult));
      }
      acc = std::move(next);
    }
    HyperlogExpr head;
    head.add(rest, c);
    out.add(head * acc);
  }
  return out;
}

HyperlogExpr boundary_at_zero(const Word& w, int j) {
  if (w.upper.involves(j)) return {};
  for (const auto& l : w.letters)
    if (l.kind == Letter::Kind::InvVar && l.index == j) return {};
  Word s = w;
  for (auto& l : s.letters)
    if (l.involves(j)) l = Letter::zero();
  return canonical(s);
}

struct RemovalMemo {
  std::mutex mutex;
  std::map<std::pair<Word, int>, HyperlogExpr> table;
};

RemovalMemo& removal_memo() {
  static RemovalMemo m;
  return m;
}

RemovalObserver& removal_observer() {
  static RemovalObserver observer;
  return observer;
}

}  // namespace

HyperlogExpr remove_variable(const Word& w, int j) {
  if (!w.depends_on(j) || is_target(w, j)) return HyperlogExpr::word(w);
  HyperlogExpr canon = canonical(w);
  if (!(canon == HyperlogExpr::word(w))) return fibrate(canon, j);
  {
    std::lock_guard lock(removal_memo().mutex);
    auto it = removal_memo().table.find({w, j});
    if (it != removal_memo().table.end()) return it->second;
  }
  if (w.upper.involves(j) && w.upper.kind != Letter::Kind::Var)
    fail(ErrorKind::Unsupported, "upper limit " + w.upper.to_string() + " is not a variable");

  HyperlogExpr result = boundary_at_zero(w, j);
  HyperlogExpr log_terms;  // coefficients of ∫ dy / y, which must cancel
  const Letter top = Letter::var(j);
  for (const auto& [pole, e] : diff_word(w, j)) {
    if (pole.kind == Letter::Kind::InvVar || (pole.kind == Letter::Kind::Var && pole.index >= j))
      fail(ErrorKind::Unsupported, "pole " + pole.to_string() + " while removing x" +
                                       std::to_string(j) + " from " + w.to_string());
    const HyperlogExpr fibred = fibrate(e, j);
    for (const auto& [k, c] : fibred.terms()) {
      TermKey rest{k.zeta, {}};
      const Word* inner = nullptr;
      for (const auto& u : k.words) {
        if (u.upper == top)
          inner = &u;
        else
          rest.words.push_back(u);
      }
      if (!inner && pole.kind == Letter::Kind::Zero) {
        log_terms.add(rest, c);
        continue;
      }
      Word integrated{inner ? inner->letters : std::vector<Letter>{}, top};
      integrated.letters.push_back(pole);
      HyperlogExpr head;
      head.add(rest, c);
      result.add(head * canonical(integrated));
    }
  }
  if (!log_terms.is_zero())
    fail(ErrorKind::Divergence, "logarithmic divergence while removing x" + std::to_string(j) +
                                    " from " + w.to_string());
  {
    std::lock_guard lock(removal_memo().mutex);
    removal_memo().table.emplace(std::make_pair(w, j), result);
  }
  if (const auto& observe = removal_observer()) observe(w, j, result);
  return result;
}

void set_removal_observer(RemovalObserver observer) { removal_observer() = std::move(observer); }

HyperlogExpr fibrate(const HyperlogExpr& e, int j) {
  HyperlogExpr out;
  const HyperlogExpr canon = canonical(e);
  for (const auto& [k, c] : canon.terms()) {
    HyperlogExpr t;
    t.add(TermKey{k.zeta, {}}, c);
    for (const auto& w : k.words) t = t * (w.depends_on(j) ? remove_variable(w, j) : HyperlogExpr::word(w));
    out.add(t);
  }
  return merge_upper(out, Letter::var(j));
}

HyperlogExpr integrate_innermost(const HyperlogExpr& expr, int j, const Letter& pole,
                                 const Letter& upper) {
  if (pole.kind == Letter::Kind::InvVar || pole.involves(j))
    fail(ErrorKind::Unsupported, "integration pole " + pole.to_string() + " is not allowed");
  HyperlogExpr out;
  for (const auto& [k, c] : expr.terms()) {
    TermKey rest{k.zeta, {}};
    const Word* inner = nullptr;
    for (const auto& w : k.words) {
      if (!w.depends_on(j)) {
        rest.words.push_back(w);
        continue;
      }
      if (!is_target(w, j) || inner)
        fail(ErrorKind::NotReady, "term is not in fibrated form in x" + std::to_string(j));
      inner = &w;
    }
    Word integrated{inner ? inner->letters : std::vector<Letter>{}, upper};
    integrated.letters.push_back(pole);
    if (integrated.letters.size() == 1 && pole.kind == Letter::Kind::Zero)
      fail(ErrorKind::Divergence, "integral of dx/x diverges at 0");
    HyperlogExpr head;
    head.add(rest, c);
    out.add(head * canonical(integrated));
  }
  return out;
}

// ---- conversion to MZVs --------------------------------------------------

MzvExpr to_mzv(const HyperlogExpr& e) {
  MzvExpr out;
  const HyperlogExpr canon = canonical(e);
  for (const auto& [k, c] : canon.terms()) {
    if (!k.words.empty())
      fail(ErrorKind::NotReady, "expression still contains words: " + k.words.front().to_string());
    if (k.zeta.empty()) {
      if (c != 0) fail(ErrorKind::InvalidSpec, "expression has a rational constant term");
      continue;
    }
    // ζ(A)ζ(B) = Σ ζ(w) over shuffles of their words; the sign (-1)^p cancels
    // because shuffling preserves the number of ones.
    std::map<std::vector<Letter>, Integer> acc{{mzv_letters(k.zeta[0]), 1}};
    for (std::size_t i = 1; i < k.zeta.size(); ++i) {
      std::map<std::vector<Letter>, Integer> next;
      auto letters = mzv_letters(k.zeta[i]);
      for (const auto& [w, m] : acc)
        for (const auto& [s, n] : shuffle_letters(w, letters)) next[s] += m * n;
      acc = std::move(next);
    }
    for (const auto& [w, m] : acc) {
      MzvIndex index;
      for (const auto& l : w) {
        if (l.kind == Letter::Kind::One)
          index.push_back(1);
        else
          ++index.back();
      }
      out.add(index, c * Rational(m));
    }
  }
  return out;
}

}  // namespace polyzeta
