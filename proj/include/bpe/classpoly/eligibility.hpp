#pragma once

#include <cstdint>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/qseries/poly.hpp"

namespace bpe {

// Does the radical of H_d divide s_ell in F_ell[x], and is it squarefree there?
// The two polynomials are kept as a certificate.
struct EligibilityReport {
  long long d;
  std::uint32_t ell;
  bool divides;
  bool squarefree;
  Poly<ModPrime> h_mod;  // product of the components of H_d, reduced mod ell
  Poly<ModPrime> s_ell;
};

EligibilityReport eligibility(long long d, std::uint32_t ell);

// Hypotheses of the corollary for (D, d, ell), with Dd read as the discriminant -Dd.
struct CorollaryReport {
  bool inert;  // (-Dd / ell) = -1
  bool kron;   // (ell / Dd) = 1
  bool range;  // ell > Dd
  bool all() const { return inert && kron && range; }
};

// Requires -d and -Dd fundamental and D = 1 or D a positive fundamental discriminant.
CorollaryReport corollary_conditions(long long D, long long d, std::uint32_t ell);

}  // namespace bpe
