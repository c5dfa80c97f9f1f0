#pragma once

#include <vector>

#include "bpe/arith/quad_ext.hpp"
#include "bpe/arith/ring.hpp"

namespace bpe {

// nu(1..N), the Dirichlet inverse of f2(D, .). Each value is compared with the
// closed form mu(m) (D/m) / sqrt(D); a mismatch is a ConsistencyError.
std::vector<QuadRational> nu_sequence(long long D, int N);

QuadRational nu(long long D, int m);

// Forward map g(n) = sum_{m | n} m A(m) f2(D, n/m), then
// A(n) = (1/n) sum_{m | n} nu(m) g(n/m). Returns the recovered A(1..N).
std::vector<Integer> twisted_roundtrip(long long D, const std::vector<Integer>& A, int N);

// The forward map alone; entry i holds g(i + 1).
std::vector<QuadRational> twisted_forward(long long D, const std::vector<Integer>& A, int N);

}  // namespace bpe
