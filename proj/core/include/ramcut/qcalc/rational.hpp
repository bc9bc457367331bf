#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ramcut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "22/7". Throws DomainError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);

/// Natural log of a positive big integer, valid far beyond double range.
double log_big(const BigInt& value);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

/// Rendering used at every reporting boundary: 12 significant digits.
std::string decimal(double value, int significant_digits = 12);

/// Exact rational value of a finite double.
Rational rational_from_double(double value);

/// True when value is an integer of the form p^e, p prime, e >= 1.
bool is_prime_power(const Rational& value);

}  // namespace ramcut
