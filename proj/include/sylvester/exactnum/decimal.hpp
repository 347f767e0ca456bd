#pragma once

// Certified numerical evaluation of PiPolynomial values.
//
// Every routine here encloses the exact value in a rational interval built
// from directed-rounding MPFR evaluations of pi, and widens the working
// precision until the requested answer no longer depends on where the true
// value sits inside the interval.

#include <compare>
#include <string>

#include "sylvester/exactnum/pi_polynomial.hpp"

namespace sylvester {

inline constexpr int kDefaultComparisonDigits = 50;
inline constexpr int kMaxComparisonDigits = 1000;

/// Closed interval [low, high] containing an exact value.
struct RationalBracket {
    Rational low;
    Rational high;
};

/// Encloses value using `bits` bits of working precision for pi.
RationalBracket enclose(const PiPolynomial& value, long bits);

struct DecimalString {
    /// `digits` significant digits, truncated toward zero, '.' separator.
    std::string text;
    /// One unit in the last printed place; |value - text| < error_bound.
    std::string error_bound;
};

/// Throws std::domain_error if digits < 1.
DecimalString to_decimal(const PiPolynomial& value, int digits);

/// Sign of value (-1, 0, 1). Zero is detected structurally.
int sign(const PiPolynomial& value, int start_digits = kDefaultComparisonDigits);

/// Exact ordering; equality is structural, everything else is decided by
/// interval evaluation up to kMaxComparisonDigits.
std::strong_ordering compare(const PiPolynomial& a, const PiPolynomial& b);

/// Nearest double, via a 30-digit decimal.
double to_double(const PiPolynomial& value);

}  // namespace sylvester
