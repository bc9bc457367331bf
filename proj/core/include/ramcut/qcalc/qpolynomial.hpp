#pragma once

#include "ramcut/qcalc/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ramcut::qcalc {

/// Integer-coefficient polynomial in the formal variable q.
///
/// coeffs()[i] is the coefficient of q^i. The representation is kept
/// trimmed, so the leading coefficient is nonzero unless the polynomial is
/// zero (which is stored as an empty coefficient list).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  QPolynomial(std::initializer_list<long long> coeffs);

  static QPolynomial constant(const BigInt& c);
  /// c * q^degree
  static QPolynomial monomial(const BigInt& c, unsigned degree);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& q) const;
  BigInt evaluate(const BigInt& q) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  QPolynomial& operator*=(const BigInt& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator*(QPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division; throws DomainError if `divisor` does not divide evenly.
  QPolynomial divide_exact(const QPolynomial& divisor) const;

  /// Highest degree first, e.g. "4q^4 + 8q^3 + 2q^2 - 4q - 10".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace ramcut::qcalc
