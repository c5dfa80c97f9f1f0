#pragma once

#include <cstdint>
#include <string>

#include "bpe/arith/ring.hpp"

namespace bpe {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct EllCurve {
  long long a1, a2, a3, a4, a6;
  std::string label;

  Integer discriminant() const;
};

EllCurve x0_11();  // y^2 + y = x^3 - x^2 - 10x - 20
EllCurve x0_17();  // y^2 + xy + y = x^3 - x^2 - 6x - 4
EllCurve x0_19();  // y^2 + y = x^3 + x^2 - 9x - 15

// X_0(ell) for ell in {11, 17, 19}; CapabilityError otherwise.
EllCurve builtin_curve(std::uint32_t ell);

// a(p) = p + 1 - #E(F_p) by summing Legendre symbols over x. Any good prime p.
long long ec_trace_naive(const EllCurve& E, std::uint64_t p);

// a(p) from the group order, located in the Hasse interval by baby-step
// giant-step on random points. Orders of several points are combined until a
// single multiple of their lcm remains in the interval; after 20 points the
// naive count decides. Requires 5 <= p < 2^31.
long long ec_trace_bsgs(const EllCurve& E, std::uint64_t p, std::uint64_t seed = 1);

// Naive below 10^4, baby-step giant-step above. Rejects composite p and primes
// of bad reduction.
long long ec_trace(const EllCurve& E, std::uint64_t p);

inline constexpr std::uint64_t kNaiveTraceBound = 10000;

}  // namespace bpe
