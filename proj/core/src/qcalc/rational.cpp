#include "ramcut/qcalc/rational.hpp"

#include "ramcut/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace ramcut {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw DomainError("malformed integer literal '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw DomainError("malformed integer literal '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

double to_double(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (num == 0) return 0.0;
  // Scale both sides into double range before dividing.
  const long num_bits = static_cast<long>(boost::multiprecision::msb(abs(num)));
  const long den_bits = static_cast<long>(boost::multiprecision::msb(den));
  const long shift_num = std::max(0L, num_bits - 900);
  const long shift_den = std::max(0L, den_bits - 900);
  const double n = (abs(num) >> shift_num).convert_to<double>();
  const double d = (den >> shift_den).convert_to<double>();
  const double magnitude = std::ldexp(n / d, static_cast<int>(shift_num - shift_den));
  return num < 0 ? -magnitude : magnitude;
}

double log_big(const BigInt& value) {
  if (value <= 0) throw DomainError("log of non-positive integer");
  const long bits = static_cast<long>(boost::multiprecision::msb(value));
  const long shift = std::max(0L, bits - 60);
  const double mantissa = (value >> shift).convert_to<double>();
  return std::log(mantissa) + static_cast<double>(shift) * std::log(2.0);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::string decimal(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
  return buffer;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational result(scaled);
  const int shift = exponent - 53;
  if (shift >= 0) {
    result *= Rational(BigInt(1) << shift);
  } else {
    result /= Rational(BigInt(1) << -shift);
  }
  return result;
}

bool is_prime_power(const Rational& value) {
  if (boost::multiprecision::denominator(value) != 1) return false;
  BigInt n = boost::multiprecision::numerator(value);
  if (n < 2) return false;
  BigInt p = 2;
  while (p * p <= n) {
    if (n % p == 0) break;
    ++p;
  }
  if (p * p > n) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace ramcut
