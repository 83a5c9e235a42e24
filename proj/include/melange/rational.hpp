#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace melange {

/// Exact rational number, always kept in canonical reduced form
/// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;

/// num/den with both parts canonicalized. Throws SemanticError on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

std::string to_text(const Rational& r);

/// r^e for integer e (e < 0 requires r != 0).
Rational rational_pow(const Rational& r, long e);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// True iff r is an integer >= 1 (the excluded set for centre indices).
bool is_positive_integer(const Rational& r);

std::size_t hash_value(const Rational& r);

} // namespace melange
