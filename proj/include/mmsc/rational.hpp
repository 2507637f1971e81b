#ifndef MMSC_RATIONAL_HPP_
#define MMSC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mmsc {

// Exact arithmetic. GMP keeps every mpq_class result canonical.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "p" or "-p"; the result is canonical. Throws Error(kParse).
Rational parse_rational(const std::string& text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Decimal rendering with the given number of fractional digits (truncated).
std::string to_decimal(const Rational& value, int digits);

// Least common multiple of the denominators (1 for an empty list).
Integer denominator_lcm(const std::vector<Rational>& values);

// num/den in lowest terms; den must be positive.
Rational make_rational(const Integer& num, const Integer& den);

Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace mmsc

#endif  // MMSC_RATIONAL_HPP_
