#pragma once

#include <cstdint>
#include <vector>

#include "bpe/arith/ring.hpp"

namespace bpe {

// How x^2 - a x + b factors over F_ell, read off from a^2/4 - b.
enum class CharpolyCase { irreducible, split, repeated };

CharpolyCase charpoly_case(std::uint32_t ell, long long a, long long b);

std::uint64_t gl2_order(std::uint32_t ell);

struct CharpolyCount {
  std::uint64_t count;  // matrices in GL_2(F_ell) with trace a, determinant b
  Rational proportion;  // count / |GL_2(F_ell)|
};

// Closed form: |G|/((ell-1)(ell+1)), |G|/(ell-1)^2 or ell|G|/((ell-1)^2(ell+1)) by
// case. Requires odd prime ell and b != 0 (DomainError otherwise).
CharpolyCount charpoly_count(std::uint32_t ell, long long a, long long b);

// Enumerates all ell^4 matrices. ell <= 11.
std::uint64_t charpoly_count_bruteforce(std::uint32_t ell, long long a, long long b);

// The full (trace, det) histogram from one enumeration; entry [a][b].
std::vector<std::vector<std::uint64_t>> charpoly_histogram_bruteforce(std::uint32_t ell);

}  // namespace bpe
