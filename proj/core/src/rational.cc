#include "splitwise/rational.h"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "splitwise/errors.h"

namespace splitwise {

Rational MakeRational(Weight numerator, Weight denominator) {
  if (denominator == 0) throw Error("zero denominator");
  return Rational(BigInt(numerator), BigInt(denominator));
}

namespace {

BigInt ParseDigits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty number");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseDigits(text.substr(0, slash), whole);
    BigInt den = ParseDigits(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    int exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      BigInt magnitude = ParseDigits(exp_text, whole);
      if (magnitude > 400) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
      exponent = magnitude.convert_to<int>() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    BigInt mantissa = 0;
    if (!int_part.empty()) mantissa = ParseDigits(int_part, whole);
    if (!frac_part.empty()) {
      mantissa = mantissa * boost::multiprecision::pow(BigInt(10), frac_part.size()) +
                 ParseDigits(frac_part, whole);
    }
    exponent -= static_cast<int>(frac_part.size());
    const BigInt scale = boost::multiprecision::pow(BigInt(10), std::abs(exponent));
    value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string ToString(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string ToDecimalString(long double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*Lg", digits, value);
  return buffer;
}

std::string ToDecimalString(const Rational& value, int digits) {
  return ToDecimalString(ToLongDouble(value), digits);
}

long double ToLongDouble(const Rational& value) {
  return value.convert_to<long double>();
}

Rational Power(const Rational& base, int exponent) {
  if (exponent < 0) throw Error("negative exponent");
  const BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                                static_cast<unsigned>(exponent));
  const BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                                static_cast<unsigned>(exponent));
  return Rational(num, den);
}

}  // namespace splitwise
