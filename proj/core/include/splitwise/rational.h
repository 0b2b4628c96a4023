#ifndef SPLITWISE_RATIONAL_H_
#define SPLITWISE_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace splitwise {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Hypothesis weights are stored as integer units over a per-instance total,
// so every cost below is an exact ratio of 64-bit integers.
using Weight = std::int64_t;

Rational MakeRational(Weight numerator, Weight denominator);

// Accepts "p/q", integers and plain decimals ("0.98", "-1.5e-3").
Rational ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);

// Fixed decimal rendering for the --float flag.
std::string ToDecimalString(const Rational& value, int digits = 10);
std::string ToDecimalString(long double value, int digits = 10);

long double ToLongDouble(const Rational& value);

// Exact r^e for e >= 0.
Rational Power(const Rational& base, int exponent);

}  // namespace splitwise

#endif  // SPLITWISE_RATIONAL_H_
