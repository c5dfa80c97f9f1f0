#include "bpe/arith/mod_prime.hpp"

#include "bpe/arith/number_theory.hpp"

namespace bpe {

ModPrime::ModPrime(long long value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw DomainError("modulus must be >= 2");
  long long r = value % static_cast<long long>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

long long ModPrime::centered() const {
  long long v = value_;
  return 2 * v > modulus_ ? v - modulus_ : v;
}

ModPrime ModPrime::inverse() const {
  if (value_ == 0) throw DomainError("division by zero in F_" + std::to_string(modulus_));
  return ModPrime(static_cast<std::uint32_t>(invmod(value_, modulus_)), modulus_, raw_tag{});
}

ModPrime ModPrime::pow(std::uint64_t e) const {
  return ModPrime(static_cast<std::uint32_t>(powmod(value_, e, modulus_)), modulus_, raw_tag{});
}

void ModPrime::throw_mismatch(const ModPrime& y) const {
  throw DomainError("mixed moduli " + std::to_string(modulus_) + " and " + std::to_string(y.modulus_));
}

ModPrime from_integer(const ModPrime& p, const Integer& n) {
  return ModPrime(static_cast<long long>(mpz_fdiv_ui(n.get_mpz_t(), p.modulus())), p.modulus());
}

ModPrime from_rational(const ModPrime& p, const Rational& r) {
  ModPrime den = from_integer(p, r.get_den());
  if (den.value() == 0)
    throw DomainError("denominator of " + to_string(r) + " vanishes modulo " + std::to_string(p.modulus()));
  return from_integer(p, r.get_num()) * den.inverse();
}

PrimeField::PrimeField(std::uint32_t ell) : ell_(ell) {
  if (!is_prime(ell)) throw InputError(std::to_string(ell) + " is not prime");
}

ModPrime PrimeField::operator()(const Integer& v) const { return from_integer(zero(), v); }

ModPrime PrimeField::operator()(const Rational& v) const { return from_rational(zero(), v); }

int PrimeField::legendre(const ModPrime& x) const {
  if (x.value() == 0) return 0;
  if (ell_ == 2) return 1;
  return x.pow((ell_ - 1) / 2).value() == 1 ? 1 : -1;
}

ModPrime PrimeField::non_residue() const {
  if (ell_ == 2) throw DomainError("F_2 has no non-residues");
  for (std::uint32_t n = 2;; ++n)
    if (legendre((*this)(n)) == -1) return (*this)(n);
}

ModPrime PrimeField::sqrt(const ModPrime& x) const {
  if (x.value() == 0) return x;
  if (ell_ == 2) return x;
  if (legendre(x) != 1) throw DomainError(std::to_string(x.value()) + " is not a square mod " + std::to_string(ell_));
  if (ell_ % 4 == 3) return x.pow((ell_ + 1) / 4);
  // Tonelli-Shanks.
  std::uint32_t q = ell_ - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  ModPrime z = non_residue();
  ModPrime c = z.pow(q);
  ModPrime r = x.pow((q + 1) / 2);
  ModPrime t = x.pow(q);
  int m = s;
  while (t.value() != 1) {
    int i = 0;
    ModPrime t2 = t;
    while (t2.value() != 1) {
      t2 = t2 * t2;
      ++i;
    }
    ModPrime b = c;
    for (int j = 0; j < m - i - 1; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  return r;
}

}  // namespace bpe
