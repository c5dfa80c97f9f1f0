#pragma once

#include <vector>

#include "bpe/arith/ring.hpp"
#include "bpe/classpoly/big_float.hpp"
#include "bpe/classpoly/quad_form.hpp"

namespace bpe {

// c(-1), c(0), ..., c(M) of j = q^-1 + 744 + 196884 q + ..., exact. Cached and
// extended on demand; safe to call from several threads.
std::vector<Integer> j_coefficients(int M);

// Number of j terms so that sum_{n > M} c(n) |q|^n < 10^-digits, using
// c(n) <= exp(4 pi sqrt(n)) and |q| = exp(-pi sqrt(d) / a).
int j_terms_needed(long long d, long long a, long digits);

// j((-b + i sqrt(d)) / (2a)) to within 10^-digits. Working precision is
// digits + 10 guard digits. Requires digits >= 30.
BigComplex singular_modulus(const QuadForm& Q, long digits);

}  // namespace bpe
