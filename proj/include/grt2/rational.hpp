#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grt2 {

// Arbitrary-precision reduced fraction. mpq_class keeps gcd(num, den) = 1 and
// den > 0 after every arithmetic operation; values built from integer pairs go
// through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

std::string to_string(const Integer& z);

}  // namespace grt2
