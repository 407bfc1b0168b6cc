#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace umbral {

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Comma-separated list of rationals, e.g. "1,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// x^e for integer e of either sign; throws DomainError for 0^negative.
Rational pow(const Rational& x, long e);

}  // namespace umbral
