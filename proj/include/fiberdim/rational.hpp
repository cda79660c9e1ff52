#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fiberdim {

using Integer = mpz_class;

/// Exact scalar of the ground field. mpq_class keeps numerator and denominator
/// coprime with a positive denominator after every canonicalized operation.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// Parses "p" or "p/q" with optional sign. Rejects decimal points and exponents.
/// Throws Error(kParse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Comma separated rationals, e.g. "1/2,-3,0". Empty text gives an empty vector.
RationalVector parse_rational_vector(std::string_view text);

std::string to_string(std::span<const Rational> values);

/// Least common multiple of the denominators (1 for an empty range).
Integer common_denominator(std::span<const Rational> values);

Integer binomial(unsigned long top, unsigned long bottom);

Integer factorial(unsigned long k);

}  // namespace fiberdim
