#include "bpe/classpoly/eligibility.hpp"

#include <string>

#include "bpe/arith/number_theory.hpp"
#include "bpe/classpoly/class_poly.hpp"
#include "bpe/error.hpp"
#include "bpe/ssforms/supersingular.hpp"

namespace bpe {

EligibilityReport eligibility(long long d, std::uint32_t ell) {
  auto s = supersingular_poly(ell).poly;
  PrimeField F(ell);
  auto H = hilbert_class_poly(d);
  Poly<ModPrime> h = Poly<ModPrime>::constant(F.one());
  for (const auto& c : H.components) h = h * c.poly.map([&](const Integer& x) { return F(x); });
  return {d, ell, divides(h, s), is_squarefree(h), h, s};
}

CorollaryReport corollary_conditions(long long D, long long d, std::uint32_t ell) {
  if (!is_fundamental_discriminant(-d))
    throw InputError("-d = " + std::to_string(-d) + " is not a fundamental discriminant");
  if (D < 1 || (D > 1 && !is_fundamental_discriminant(D)))
    throw InputError("D = " + std::to_string(D) + " must be 1 or a positive fundamental discriminant");
  if (!is_fundamental_discriminant(-D * d))
    throw InputError("-Dd = " + std::to_string(-D * d) + " is not a fundamental discriminant");
  if (!is_prime(ell)) throw InputError("ell must be prime");
  long long Dd = D * d;
  return {kronecker(-Dd, ell) == -1, kronecker(ell, Dd) == 1, (long long)ell > Dd};
}

}  // namespace bpe
