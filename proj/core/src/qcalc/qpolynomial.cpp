#include "ramcut/qcalc/qpolynomial.hpp"

#include "ramcut/error.hpp"

#include <algorithm>

namespace ramcut::qcalc {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

QPolynomial QPolynomial::monomial(const BigInt& c, unsigned degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return QPolynomial(std::move(coeffs));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw DomainError("polynomial division is not exact");
  std::vector<BigInt> remainder = coeffs_;
  const BigInt& lead = divisor.coeffs_.back();
  const std::size_t shift_max = coeffs_.size() - divisor.coeffs_.size();
  std::vector<BigInt> quotient(shift_max + 1);
  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const BigInt& top = remainder[s + divisor.coeffs_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw DomainError("polynomial division is not exact");
    const BigInt factor = top / lead;
    quotient[s] = factor;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) remainder[s + j] -= factor * divisor.coeffs_[j];
  }
  if (std::any_of(remainder.begin(), remainder.end(), [](const BigInt& c) { return c != 0; })) {
    throw DomainError("polynomial division is not exact");
  }
  return QPolynomial(std::move(quotient));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += magnitude.str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ramcut::qcalc
