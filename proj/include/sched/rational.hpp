#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sched {

/// Exact rational with unbounded numerator and denominator. GMP keeps every
/// arithmetic result in lowest terms with a positive denominator.
using Rational = mpq_class;

/// A point on the nonnegative time axis.
using TimePoint = Rational;

/// A nonnegative length of time (processing times, slack).
using Span = Rational;

/// Builds num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);
Rational make_rational(long num, long den = 1);

/// Parses "N", "N/D" or a plain decimal such as "0.25" (exact, base 10).
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1" or "0/1".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& q, int significant_digits = 12);

}  // namespace sched
