#pragma once

#include <cstdint>
#include <vector>

namespace ramcut::cayley {

/// Element of F_q encoded as the base-p digits of its polynomial
/// representative: c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
using Element = std::uint32_t;

/// F_{p^e} realised as F_p[x] / (modulus).
class FiniteField {
 public:
  /// `modulus` lists c_0..c_e and is required when e > 1; it is scaled to be
  /// monic. Throws DomainError if p is not prime, q exceeds 2^31, or the
  /// modulus is reducible (checked by trial division when q <= 2^20).
  explicit FiniteField(unsigned p, unsigned e = 1, std::vector<unsigned> modulus = {});

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  /// False when q was too large for the exhaustive irreducibility check.
  bool modulus_verified() const noexcept { return verified_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws DomainError for 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t exponent) const;
  /// Validates 0 <= value < q.
  Element element(std::uint64_t value) const;
  /// True when a is a d-th power in the multiplicative group.
  bool is_power(Element a, unsigned d) const;

  bool operator==(const FiniteField& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  std::vector<unsigned> digits(Element a) const;
  Element encode(const std::vector<unsigned>& digits) const;
  Element slow_mul(Element a, Element b) const;

  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  bool verified_ = true;
  /// Full q x q product table for small extension fields.
  std::vector<Element> mul_table_;
};

bool is_prime(std::uint64_t n);

}  // namespace ramcut::cayley
