#include "polyzeta/rational.hpp"

#include <mutex>
#include <vector>

#include "polyzeta/error.hpp"

namespace polyzeta {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::InvalidSpec, "malformed rational '" + s + "'");
  Integer d{den};
  if (d == 0) fail(ErrorKind::InvalidSpec, "zero denominator in '" + s + "'");
  Rational q{Integer{num}, d};
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  // Rows are cached; the tables used here never exceed a few dozen rows.
  static std::mutex mutex;
  static std::vector<std::vector<Integer>> pascal{{Integer(1)}};
  std::lock_guard lock(mutex);
  while (pascal.size() <= n) {
    const auto& prev = pascal.back();
    std::vector<Integer> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) fail(ErrorKind::InvalidSpec, "zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

}  // namespace polyzeta
