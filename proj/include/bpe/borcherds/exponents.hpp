#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/arith/ring.hpp"
#include "bpe/qseries/qseries.hpp"

namespace bpe {

// A(n^2, d) for 1 <= n <= N, from H_d(j) = q^{-h(d)} prod (1 - q^n)^{A(n^2, d)}.
struct ExponentTable {
  long long d;
  int N;
  std::vector<Integer> values;  // values[n - 1] = A(n^2, d)

  const Integer& operator()(int n) const;
};

// L = -q d/dq log H_d(j(z)) over Q to order N. Its constant term is h(d).
QSeries<Rational> log_derivative_exact(long long d, int N);

// Throws ConsistencyError if the constant term of L is not h(d) or if some
// n A(n^2, d) is not divisible by n.
ExponentTable exact_exponents(long long d, int N);

// L mod ell to order N, computed directly over F_ell. Requires H_d | s_ell in
// F_ell[x]; otherwise HypothesisError.
QSeries<ModPrime> log_derivative_mod(long long d, std::uint32_t ell, int N);

// {"d", "N", "A": [decimal strings]}
std::string exponents_to_json(const ExponentTable& t);

}  // namespace bpe
