#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpe/arith/ring.hpp"
#include "bpe/borcherds/congruence.hpp"

namespace bpe {

// Distribution of A(p^2, d) mod ell over t in F_ell: exact limits, or counts of
// primes p < X against pi(X).
struct DensityTable {
  std::uint32_t ell = 0;
  bool asymptotic = true;
  std::vector<Rational> exact;         // asymptotic only
  std::vector<std::uint64_t> counts;   // empirical only
  std::uint64_t X = 0;
  std::uint64_t prime_count = 0;       // pi(X), including p = ell
  std::string source;                  // "group", "curve X0(11)", "expansions", ...

  double ratio(std::uint32_t t) const;
};

// Chebotarev limit for r = 0, 1, 2. For r = 2 the image is taken to be
// {(M, N) : det M = det N}. CapabilityError for r > 2.
DensityTable asymptotic_table(const CongruenceFormula& F);

// Tally over primes p < X, p != ell. Uses the curve X0(ell) for ell in
// {11, 17, 19} with r = 1, exact eigenform expansions for X <= 10^5, and the
// constant formula when r = 0. Otherwise CapabilityError. The result does not
// depend on the thread count.
DensityTable empirical_table(const CongruenceFormula& F, std::uint64_t X, unsigned threads = 1);

inline constexpr std::uint64_t kExpansionBound = 100000;

// CSV with header "t,count,ratio" (empirical) or "t,exact,ratio" (asymptotic);
// ratios at 4 decimals.
std::string density_to_csv(const DensityTable& T);
std::string density_to_json(const DensityTable& T);

}  // namespace bpe
