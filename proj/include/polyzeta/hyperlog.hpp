#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/mzv.hpp"
#include "polyzeta/rational.hpp"

namespace polyzeta {

/// One letter of the alphabet {0, 1, x_j, x_j^-1}.
struct Letter {
  enum class Kind { Zero, One, Var, InvVar };
  Kind kind = Kind::Zero;
  int index = 0;  // variable number for Var / InvVar, 0 otherwise

  static Letter zero() { return {Kind::Zero, 0}; }
  static Letter one() { return {Kind::One, 0}; }
  static Letter var(int j);
  static Letter inv(int j);

  bool is_constant() const { return kind == Kind::Zero || kind == Kind::One; }
  /// True for x_j and x_j^-1.
  bool involves(int j) const { return index == j && !is_constant(); }
  /// Numeric value given x_1..x_r (x[0] = x_1).
  double value(const std::vector<double>& x) const;
  std::string to_string() const;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Iterated integral I(0; a_1,...,a_n; upper), upper ∈ {1, x_j}.
struct Word {
  std::vector<Letter> letters;
  Letter upper = Letter::one();

  bool empty() const { return letters.empty(); }
  bool depends_on(int j) const;
  /// "I(0; 1,0,x1^-1; x2)".
  std::string to_string() const;
  /// Inverse of to_string. Throws InvalidSpec on malformed text.
  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Formal product of MZV symbols, kept sorted; empty means 1.
using ZetaMonomial = std::vector<MzvIndex>;

/// One monomial shape: zeta factors times a sorted product of words.
struct TermKey {
  ZetaMonomial zeta;
  std::vector<Word> words;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// ℚ-linear combination of TermKeys, canonically ordered. Words are stored
/// as written; canonical() applies the constant-word rules.
class HyperlogExpr {
 public:
  using Terms = std::map<TermKey, Rational>;

  HyperlogExpr() = default;
  static HyperlogExpr constant(const Rational& c);
  static HyperlogExpr word(const Word& w, const Rational& c = 1);
  static HyperlogExpr zeta(const MzvIndex& index, const Rational& c = 1);

  void add(TermKey key, const Rational& c);
  void add(const HyperlogExpr& other, const Rational& scale = 1);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HyperlogExpr operator+(const HyperlogExpr& o) const;
  HyperlogExpr operator-(const HyperlogExpr& o) const;
  HyperlogExpr operator*(const HyperlogExpr& o) const;
  friend HyperlogExpr operator*(const Rational& c, const HyperlogExpr& e);
  friend bool operator==(const HyperlogExpr&, const HyperlogExpr&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Σ_pole 1/(x_j - pole) · expr, the normal form of a derivative in x_j.
using PoleExpansion = std::map<Letter, HyperlogExpr>;

/// All interleavings of two letter sequences with multiplicity.
std::map<std::vector<Letter>, Integer> shuffle_letters(const std::vector<Letter>& u,
                                                       const std::vector<Letter>& v);

/// Shuffle product of two words with the same upper limit.
HyperlogExpr shuffle(const Word& w1, const Word& w2);

/// Rewrites constant and scale-reducible words:
///  - upper 1 over {0,1}: (-1)^p ζ(blocks);
///  - upper 1 with inverse letters of one variable x_i: rescale by x_i;
///  - upper x_i over {0, x_i}: the constant obtained by rescaling to 1;
///  - the empty word: 1.
HyperlogExpr canonical(const Word& w);
HyperlogExpr canonical(const HyperlogExpr& e);

/// ∂/∂x_j with every ε-factor split into partial fractions 1/(x_j - pole),
/// pole ∈ {0, 1, x_i}. Throws Unsupported for letter pairs outside that form.
PoleExpansion diff_wrt_var(const HyperlogExpr& expr, int j);
PoleExpansion diff_word(const Word& w, int j);

/// Rewrites w so that x_j occurs only through words with upper limit x_j and
/// letters in {0, 1, x_i (i < j)}, with products of such words merged.
/// Boundary constants come from the limit x_j -> 0.
HyperlogExpr remove_variable(const Word& w, int j);

/// Hook invoked once per freshly computed (not memoized) removal with the
/// input word, the variable index and the result. Pass {} to uninstall.
using RemovalObserver = std::function<void(const Word&, int, const HyperlogExpr&)>;
void set_removal_observer(RemovalObserver observer);

/// Applies remove_variable to every x_j-dependent factor, then shuffles the
/// x_j-words of each term into single words.
HyperlogExpr fibrate(const HyperlogExpr& e, int j);

/// ∫_0^{upper} expr(x_j) dx_j / (x_j - pole) for an expression already in
/// fibrated form in x_j. Appends pole to the x_j-word and relabels its upper
/// limit to `upper` (x_{j-1} or 1).
HyperlogExpr integrate_innermost(const HyperlogExpr& expr, int j, const Letter& pole,
                                 const Letter& upper);

/// Admissible {0,1} word with upper 1 → (-1)^p ζ(k_1,...,k_p).
MzvExpr word_to_mzv(const Word& w);

/// Turns an expression whose words are all constants into an MzvExpr;
/// products of ζ's are multiplied out by shuffling their words.
MzvExpr to_mzv(const HyperlogExpr& e);

/// Word over {0,1} read off from an MZV index: 1,0^{k_1-1},1,0^{k_2-1},...
std::vector<Letter> mzv_letters(const MzvIndex& index);

// ---- numeric evaluation --------------------------------------------------

/// I(0; letters; upper) for real letters, each either 0 or outside the open
/// interval (0, upper), with letters[0] != 0 and letters.back() != upper.
double iterated_integral(const std::vector<double>& letters, double upper);

/// Numeric value of a word at x = (x_1,...,x_r) in 0 < x_r < ... < x_1 < 1.
double word_eval_numeric(const Word& w, const std::vector<double>& x);
double expr_eval_numeric(const HyperlogExpr& e, const std::vector<double>& x);
double poles_eval_numeric(const PoleExpansion& d, int j, const std::vector<double>& x);

/// I(0; a; X) against I(0; c·a; c·X) numerically at the given point.
bool scale_invariance_check(const Word& w, double c, const std::vector<double>& x,
                            double tol = 1e-10);

}  // namespace polyzeta
