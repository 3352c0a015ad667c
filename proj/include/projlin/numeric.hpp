#ifndef PROJLIN_NUMERIC_HPP_
#define PROJLIN_NUMERIC_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace projlin {

// Arbitrary-precision nonnegative counts (number of arrangements grows
// like a product of factorials).
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Fixed-point rendering rounded half away from zero to `digits` decimals.
std::string format_decimal(const Rational& value, int digits);

std::string format_count(const BigCount& value);

// Nearest double; exact inputs with small denominators round correctly.
double to_double(const Rational& value);

BigCount factorial(std::uint64_t n);

}  // namespace projlin

#endif  // PROJLIN_NUMERIC_HPP_
