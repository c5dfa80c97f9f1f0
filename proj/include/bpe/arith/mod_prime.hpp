#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "bpe/arith/ring.hpp"

namespace bpe {

// Element of F_ell with the canonical representative in [0, ell).
// The modulus travels with the value so that generic code can build zero and
// one from any element. Primality of the modulus is checked by PrimeField,
// which is the intended way to construct elements.
class ModPrime {
 public:
  ModPrime(long long value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  // Centered representative in (-ell/2, ell/2].
  long long centered() const;

  ModPrime inverse() const;
  ModPrime pow(std::uint64_t e) const;

  ModPrime operator-() const { return ModPrime(value_ == 0 ? 0 : modulus_ - value_, modulus_, raw_tag{}); }

  friend ModPrime operator+(const ModPrime& x, const ModPrime& y) {
    x.check_same(y);
    std::uint64_t s = std::uint64_t(x.value_) + y.value_;
    if (s >= x.modulus_) s -= x.modulus_;
    return ModPrime(static_cast<std::uint32_t>(s), x.modulus_, raw_tag{});
  }
  friend ModPrime operator-(const ModPrime& x, const ModPrime& y) {
    x.check_same(y);
    std::uint32_t s = x.value_ >= y.value_ ? x.value_ - y.value_ : x.value_ + (x.modulus_ - y.value_);
    return ModPrime(s, x.modulus_, raw_tag{});
  }
  friend ModPrime operator*(const ModPrime& x, const ModPrime& y) {
    x.check_same(y);
    return ModPrime(static_cast<std::uint32_t>(std::uint64_t(x.value_) * y.value_ % x.modulus_), x.modulus_,
                    raw_tag{});
  }
  friend ModPrime operator/(const ModPrime& x, const ModPrime& y) { return x * y.inverse(); }

  ModPrime& operator+=(const ModPrime& y) { return *this = *this + y; }
  ModPrime& operator-=(const ModPrime& y) { return *this = *this - y; }
  ModPrime& operator*=(const ModPrime& y) { return *this = *this * y; }

  friend bool operator==(const ModPrime& x, const ModPrime& y) {
    return x.value_ == y.value_ && x.modulus_ == y.modulus_;
  }
  friend bool operator!=(const ModPrime& x, const ModPrime& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const ModPrime& x) { return os << x.value_; }

 private:
  struct raw_tag {};
  ModPrime(std::uint32_t value, std::uint32_t modulus, raw_tag) : value_(value), modulus_(modulus) {}
  void check_same(const ModPrime& y) const {
    if (modulus_ != y.modulus_) throw_mismatch(y);
  }
  [[noreturn]] void throw_mismatch(const ModPrime& y) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

// The prime field F_ell. Construction verifies that ell is prime.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t ell);

  std::uint32_t characteristic() const { return ell_; }

  ModPrime operator()(long long v) const { return ModPrime(v, ell_); }
  ModPrime operator()(const Integer& v) const;
  // Denominator is inverted mod ell; throws DomainError if ell divides it.
  ModPrime operator()(const Rational& v) const;

  ModPrime zero() const { return ModPrime(0, ell_); }
  ModPrime one() const { return ModPrime(1, ell_); }

  // Some quadratic non-residue (smallest positive one).
  ModPrime non_residue() const;
  // Legendre symbol of x (0 for x = 0).
  int legendre(const ModPrime& x) const;
  // A square root of a residue x; throws DomainError for non-residues.
  ModPrime sqrt(const ModPrime& x) const;

 private:
  std::uint32_t ell_;
};

inline ModPrime zero_like(const ModPrime& x) { return ModPrime(0, x.modulus()); }
inline ModPrime one_like(const ModPrime& x) { return ModPrime(1, x.modulus()); }
inline ModPrime from_integer(const ModPrime& p, long long n) { return ModPrime(n, p.modulus()); }
ModPrime from_integer(const ModPrime& p, const Integer& n);
ModPrime from_rational(const ModPrime& p, const Rational& r);
inline bool is_zero(const ModPrime& x) { return x.value() == 0; }
inline ModPrime inverse(const ModPrime& x) { return x.inverse(); }

inline std::string to_string(const ModPrime& x) { return std::to_string(x.value()); }

}  // namespace bpe
