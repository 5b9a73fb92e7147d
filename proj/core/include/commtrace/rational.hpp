#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace commtrace {

// Exact rational coefficient. GMP keeps mpq values canonical (reduced, positive
// denominator) across all arithmetic; the helpers below keep construction canonical too.
using Rational = mpq_class;
using BigInt = mpz_class;

// Throws std::domain_error on a zero denominator.
Rational make_rational(long numerator, long denominator = 1);

// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "3", "-1/3".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace commtrace
