#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lambda_osc {

/// Arbitrary-precision rational, always kept in canonical reduced form.
using Rational = mpq_class;

/// Builds num/den and canonicalizes.
Rational make_rational(long num, long den = 1);

/// Parses "3", "-3/10", "0.15", "1e-6" or "-2.5E3" exactly (decimal strings
/// are read as the decimal value, not as the nearest binary float).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when q == 1.
std::string to_string(const Rational& q);

/// Nearest double.
double to_double(const Rational& q);

/// Exact rational value of a finite double. Throws on NaN/inf.
Rational exact_from_double(double x);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace lambda_osc
