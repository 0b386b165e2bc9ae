#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyzeta {

/// Exact rational number, always kept in lowest terms with positive
/// denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional sign). Throws InvalidSpec on malformed input.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

/// Binomial coefficient via Pascal's rule; zero outside 0 <= k <= n.
Integer binomial(unsigned n, unsigned k);

/// q^e for integer e, including negative e (q must be nonzero then).
Rational pow(const Rational& q, long e);

}  // namespace polyzeta
