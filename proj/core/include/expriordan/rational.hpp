#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace expriordan {

// Exact rationals everywhere. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Renders `q` as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);

// n! as a Rational, for converting between OGF and EGF coefficients.
Rational factorial_q(unsigned long n);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace expriordan
