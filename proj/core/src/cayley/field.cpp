#include "ramcut/cayley/field.hpp"

#include "ramcut/error.hpp"

#include <numeric>
#include <string>

namespace ramcut::cayley {

namespace {

using Poly = std::vector<unsigned>;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a nonzero b over F_p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const auto lead_inv = static_cast<unsigned>(mod_pow(b.back(), p - 2, p));
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const auto factor = static_cast<unsigned>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    for (std::size_t i = 0; i <= db; ++i) {
      const auto sub = static_cast<std::uint64_t>(factor) * b[i] % p;
      a[shift + i] = static_cast<unsigned>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField::FiniteField(unsigned p, unsigned e, std::vector<unsigned> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (1ull << 31)) throw DomainError("field size p^e exceeds 2^31");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    if (!modulus.empty() && (modulus.size() != 2 || modulus[1] % p == 0)) {
      throw DomainError("modulus for a prime field must be linear");
    }
    modulus_ = {0, 1};
    return;
  }
  if (modulus.size() != e + 1) {
    throw DomainError("modulus must list e+1 = " + std::to_string(e + 1) + " coefficients");
  }
  for (auto& c : modulus) {
    if (c >= p) throw DomainError("modulus coefficient " + std::to_string(c) + " not reduced mod p");
  }
  if (modulus.back() == 0) throw DomainError("modulus leading coefficient is zero");
  const auto lead_inv = static_cast<unsigned>(mod_pow(modulus.back(), p - 2, p));
  for (auto& c : modulus) c = static_cast<unsigned>(static_cast<std::uint64_t>(c) * lead_inv % p);
  modulus_ = std::move(modulus);

  if (q_ <= (1u << 20)) {
    if (!is_irreducible(modulus_, p)) throw DomainError("modulus is reducible over F_" + std::to_string(p));
  } else {
    verified_ = false;
  }
  if (q_ <= 256) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) mul_table_[a * q_ + b] = slow_mul(a, b);
    }
  }
}

std::vector<unsigned> FiniteField::digits(Element a) const {
  std::vector<unsigned> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Element FiniteField::encode(const std::vector<unsigned>& digits) const {
  Element out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * p_ + digits[i];
  return out;
}

Element FiniteField::add(Element a, Element b) const {
  if (e_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % p_);
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Element FiniteField::neg(Element a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FiniteField::slow_mul(Element a, Element b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  Poly product(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    for (unsigned j = 0; j < e_; ++j) {
      product[i + j] = static_cast<unsigned>((product[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  auto reduced = poly_mod(std::move(product), modulus_, p_);
  reduced.resize(e_, 0);
  return encode(reduced);
}

Element FiniteField::mul(Element a, Element b) const {
  if (e_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return slow_mul(a, b);
}

Element FiniteField::pow(Element a, std::uint64_t exponent) const {
  Element result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return pow(a, q_ - 2);
}

Element FiniteField::element(std::uint64_t value) const {
  if (value >= q_) throw DomainError("field element " + std::to_string(value) + " not below q = " + std::to_string(q_));
  return static_cast<Element>(value);
}

bool FiniteField::is_power(Element a, unsigned d) const {
  if (a == 0) return false;
  const std::uint64_t order = q_ - 1;
  const std::uint64_t g = std::gcd<std::uint64_t>(d, order);
  return pow(a, order / g) == 1;
}

}  // namespace ramcut::cayley
