#pragma once

#include <complex>
#include <vector>

#include "bpe/arith/quad_ext.hpp"

namespace bpe {

// f2(r) = sum_{k=1}^{D-1} (D/k) zeta_D^{kr} for a positive fundamental
// discriminant D, via the Gauss sum closed form (D/r) sqrt(D).
QuadRational f2(long long D, long long r);

// The same sum evaluated directly in double precision.
std::complex<double> f2_numeric(long long D, long long r);

// Coefficients t^1..t^N of -t d/dt log P_D(t); entry i holds t^(i+1).
std::vector<QuadRational> pd_log_coeffs(long long D, int N);

}  // namespace bpe
