#pragma once

#include <cstdint>
#include <vector>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/qseries/poly.hpp"
#include "bpe/qseries/qseries.hpp"

namespace bpe {

struct SupersingularPoly {
  std::uint32_t ell;
  Poly<ModPrime> poly;  // monic
  // Leading coefficient of x^delta (x - 1728)^epsilon E~(x) before
  // normalization, as +1 or -1. Diagnostic only.
  int sign;
};

// s_ell(x) over F_ell from E_{ell-1} / (Delta^m E4^delta E6^epsilon) written as a
// polynomial in j. Requires prime ell >= 5.
SupersingularPoly supersingular_poly(std::uint32_t ell);

// Independent oracle: enumerate every j in F_{ell^2}, count points on a curve
// with that invariant, keep j with trace = 0 mod ell. Requires 5 <= ell <= 100.
Poly<ModPrime> supersingular_poly_bruteforce(std::uint32_t ell);

// Supersingular j-invariants that lie in F_ell, from the oracle enumeration.
std::vector<std::uint32_t> supersingular_j_in_prime_field(std::uint32_t ell);

}  // namespace bpe
