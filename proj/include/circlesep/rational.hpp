#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace circlesep {

/// Exact rational backed by GMP. Arithmetic results are always canonical
/// (positive denominator, reduced).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws Error(Parse) when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" strictly: no sign on q, no '+', no leading zeros,
/// q > 1, gcd(|p|, q) = 1, no "-0". Anything else is Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" string; inverse of parse_rational.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

}  // namespace circlesep
