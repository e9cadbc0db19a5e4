#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nesto {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Renders "p/q" in lowest terms; the denominator is always present, so 2 is
// "2/1".
std::string to_string(const Rational& r);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace nesto
