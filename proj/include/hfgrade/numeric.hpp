#pragma once

// Exact scalar types shared by every module. Integers are arbitrary precision;
// quarter-integer measures are carried as exact rationals.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hfgrade {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& value);

// Residue in [0, m) for m > 0; returns a unchanged when m == 0.
Integer reduce_mod(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace hfgrade
