#pragma once

#include <gmpxx.h>
#include <string>

namespace curvedop {

// Exact rational scalar. mpq_class keeps values canonical (gcd(num, den) = 1,
// den > 0) after arithmetic; construction from raw parts must canonicalize.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical "p" or "p/q" form, denominator positive.
std::string format_rational(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational factorial_rational(int n);
Rational inverse_factorial(int n);

}  // namespace curvedop
