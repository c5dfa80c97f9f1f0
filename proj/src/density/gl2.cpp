#include "bpe/density/gl2.hpp"

#include <string>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/arith/number_theory.hpp"
#include "bpe/error.hpp"

namespace bpe {

namespace {

void require_odd_prime(std::uint32_t ell) {
  if (ell < 3 || !is_prime(ell)) throw InputError("GL_2 counts need an odd prime, got " + std::to_string(ell));
}

}  // namespace

std::uint64_t gl2_order(std::uint32_t ell) {
  std::uint64_t l = ell;
  return (l * l - 1) * (l * l - l);
}

CharpolyCase charpoly_case(std::uint32_t ell, long long a, long long b) {
  require_odd_prime(ell);
  PrimeField F(ell);
  // a^2/4 - b and a^2 - 4b differ by the square 4
  int chi = F.legendre(F(a) * F(a) - F(4) * F(b));
  if (chi == 0) return CharpolyCase::repeated;
  return chi > 0 ? CharpolyCase::split : CharpolyCase::irreducible;
}

CharpolyCount charpoly_count(std::uint32_t ell, long long a, long long b) {
  require_odd_prime(ell);
  if (PrimeField(ell)(b).value() == 0) throw DomainError("determinant 0 is not in GL_2");
  std::uint64_t l = ell, count = 0;
  switch (charpoly_case(ell, a, b)) {
    case CharpolyCase::irreducible: count = l * l - l; break;
    case CharpolyCase::split: count = l * l + l; break;
    case CharpolyCase::repeated: count = l * l; break;
  }
  return {count, make_rational(Integer(static_cast<unsigned long>(count)),
                               Integer(static_cast<unsigned long>(gl2_order(ell))))};
}

std::vector<std::vector<std::uint64_t>> charpoly_histogram_bruteforce(std::uint32_t ell) {
  require_odd_prime(ell);
  if (ell > 11) throw CapabilityError("brute-force GL_2 enumeration is limited to ell <= 11");
  std::vector<std::vector<std::uint64_t>> h(ell, std::vector<std::uint64_t>(ell, 0));
  for (std::uint32_t x = 0; x < ell; ++x)
    for (std::uint32_t y = 0; y < ell; ++y)
      for (std::uint32_t z = 0; z < ell; ++z)
        for (std::uint32_t w = 0; w < ell; ++w) {
          std::uint32_t det = (x * w + ell * ell - (y * z) % ell) % ell;
          if (det != 0) ++h[(x + w) % ell][det];
        }
  return h;
}

std::uint64_t charpoly_count_bruteforce(std::uint32_t ell, long long a, long long b) {
  auto h = charpoly_histogram_bruteforce(ell);
  PrimeField F(ell);
  return h[F(a).value()][F(b).value()];
}

}  // namespace bpe
