#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace segstab {

/// Exact rational coordinate / cost type used throughout the library.
using Rational = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "-1.25". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders "p/q" in lowest terms, including integers ("3/1").
std::string format_rational(const Rational& value);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 12);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Largest integer <= value.
mpz_class floor_of(const Rational& value);
/// Smallest integer >= value.
mpz_class ceil_of(const Rational& value);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// 2^exponent as an exact rational (exponent may be negative).
Rational pow2(int exponent);

}  // namespace segstab
