#include "bpe/density/curve.hpp"

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "bpe/arith/number_theory.hpp"
#include "bpe/error.hpp"

namespace bpe {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulm(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 reduce(long long v, u64 p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r);
}

u64 reduce(const Integer& v, u64 p) {
  Integer r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

int legendre_u(u64 a, u64 p) {
  if (a % p == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Tonelli-Shanks for a quadratic residue a mod odd prime p.
u64 sqrt_mod(u64 a, u64 p) {
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (legendre_u(z, p) != -1) ++z;
  u64 m = u64(s), c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulm(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 k = 0; k + i + 1 < m; ++k) b = mulm(b, b, p);
    m = i;
    c = mulm(b, b, p);
    t = mulm(t, c, p);
    r = mulm(r, b, p);
  }
  return r;
}

struct Invariants {
  Integer b2, b4, b6, b8;
};

Invariants invariants(const EllCurve& E) {
  Integer a1 = static_cast<long>(E.a1), a2 = static_cast<long>(E.a2), a3 = static_cast<long>(E.a3),
          a4 = static_cast<long>(E.a4), a6 = static_cast<long>(E.a6);
  Invariants v;
  v.b2 = a1 * a1 + 4 * a2;
  v.b4 = 2 * a4 + a1 * a3;
  v.b6 = a3 * a3 + 4 * a6;
  v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return v;
}

// Short model y^2 = x^3 + A x + B over F_p, p >= 5.
struct Short {
  u64 p, A, B;
};

Short short_model(const EllCurve& E, u64 p) {
  auto v = invariants(E);
  Integer c4 = v.b2 * v.b2 - 24 * v.b4;
  Integer c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
  return {p, reduce(Integer(-27 * c4), p), reduce(Integer(-54 * c6), p)};
}

struct Pt {
  u64 x = 0, y = 0;
  bool inf = true;
  friend bool operator==(const Pt&, const Pt&) = default;
};

Pt add(const Short& E, const Pt& P, const Pt& Q) {
  const u64 p = E.p;
  if (P.inf) return Q;
  if (Q.inf) return P;
  u64 lam;
  if (P.x == Q.x) {
    if (addm(P.y, Q.y, p) == 0) return Pt{};
    u64 num = addm(mulm(3, mulm(P.x, P.x, p), p), E.A, p);
    lam = mulm(num, invmod(mulm(2, P.y, p), p), p);
  } else {
    lam = mulm(subm(Q.y, P.y, p), invmod(subm(Q.x, P.x, p), p), p);
  }
  u64 x = subm(subm(mulm(lam, lam, p), P.x, p), Q.x, p);
  u64 y = subm(mulm(lam, subm(P.x, x, p), p), P.y, p);
  return Pt{x, y, false};
}

Pt neg(const Short& E, const Pt& P) { return P.inf ? P : Pt{P.x, subm(0, P.y, E.p), false}; }

Pt mul(const Short& E, Pt P, u64 k) {
  Pt R;
  while (k) {
    if (k & 1U) R = add(E, R, P);
    k >>= 1U;
    if (k) P = add(E, P, P);
  }
  return R;
}

Pt random_point(const Short& E, std::mt19937_64& rng) {
  for (;;) {
    u64 x = rng() % E.p;
    u64 rhs = addm(addm(mulm(mulm(x, x, E.p), x, E.p), mulm(E.A, x, E.p), E.p), E.B, E.p);
    if (rhs == 0) return Pt{x, 0, false};
    if (legendre_u(rhs, E.p) == 1) return Pt{x, sqrt_mod(rhs, E.p), false};
  }
}

// Some N in [lo, hi] with N P = O.
u64 find_multiple(const Short& E, const Pt& P, u64 lo, u64 hi) {
  u64 m = isqrt(hi - lo) + 1;
  std::unordered_map<u64, u64> baby;  // key of jP -> smallest j
  baby.reserve(std::size_t(2 * m));
  auto key = [&](const Pt& Q) { return Q.inf ? ~u64(0) : Q.x * E.p + Q.y; };
  Pt J;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(key(J), j);
    J = add(E, J, P);
  }
  Pt G = mul(E, P, m), R = mul(E, P, lo);
  for (u64 i = 0; lo + i * m <= hi; ++i) {
    auto it = baby.find(key(neg(E, R)));
    if (it != baby.end() && lo + i * m + it->second <= hi) return lo + i * m + it->second;
    R = add(E, R, G);
  }
  throw ConsistencyError("no multiple of the point order in the Hasse interval for p = " + std::to_string(E.p));
}

u64 point_order(const Short& E, const Pt& P, u64 multiple) {
  u64 ord = multiple;
  for (auto [q, e] : factorize(multiple)) {
    (void)e;
    while (ord % q == 0 && mul(E, P, ord / q).inf) ord /= q;
  }
  return ord;
}

void require_good_prime(const EllCurve& E, u64 p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (reduce(E.discriminant(), p) == 0)
    throw InputError(E.label + " has bad reduction at p = " + std::to_string(p));
}

}  // namespace

Integer EllCurve::discriminant() const {
  auto v = invariants(*this);
  return -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
}

EllCurve x0_11() { return {0, -1, 1, -10, -20, "X0(11)"}; }
EllCurve x0_17() { return {1, -1, 1, -6, -4, "X0(17)"}; }
EllCurve x0_19() { return {0, 1, 1, -9, -15, "X0(19)"}; }

EllCurve builtin_curve(std::uint32_t ell) {
  switch (ell) {
    case 11: return x0_11();
    case 17: return x0_17();
    case 19: return x0_19();
    default: throw CapabilityError("no built-in curve for ell = " + std::to_string(ell) + " (have 11, 17, 19)");
  }
}

long long ec_trace_naive(const EllCurve& E, std::uint64_t p) {
  require_good_prime(E, p);
  if (p == 2) {
    long long affine = 0;
    for (long long x = 0; x < 2; ++x)
      for (long long y = 0; y < 2; ++y) {
        long long lhs = y * y + E.a1 * x * y + E.a3 * y, rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
        if (((lhs - rhs) % 2 + 2) % 2 == 0) ++affine;
      }
    return 2 + 1 - (affine + 1);
  }
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  auto v = invariants(E);
  u64 b2 = reduce(v.b2, p), b4 = reduce(Integer(2 * v.b4), p), b6 = reduce(v.b6, p);
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (u64 y = 1; y <= p / 2; ++y) chi[mulm(y, y, p)] = 1;
  long long s = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 r = addm(addm(mulm(addm(mulm(4, x, p), b2, p), mulm(x, x, p), p), mulm(b4, x, p), p), b6, p);
    s += chi[r];
  }
  return -s;
}

long long ec_trace_bsgs(const EllCurve& E, std::uint64_t p, std::uint64_t seed) {
  require_good_prime(E, p);
  if (p < 5 || p >= (u64(1) << 31)) throw InputError("baby-step giant-step traces need 5 <= p < 2^31");
  Short S = short_model(E, p);
  u64 w = isqrt(4 * p);  // floor(2 sqrt p)
  u64 lo = p + 1 - w, hi = p + 1 + w;
  std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ULL));
  u64 l = 1;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Pt P = random_point(S, rng);
    u64 ord = point_order(S, P, find_multiple(S, P, lo, hi));
    l = std::lcm(l, ord);
    u64 first = (lo + l - 1) / l * l;
    if (first > hi) throw ConsistencyError("point orders incompatible with the Hasse interval at p = " + std::to_string(p));
    if (first + l > hi) return static_cast<long long>(p + 1) - static_cast<long long>(first);
  }
  return ec_trace_naive(E, p);
}

long long ec_trace(const EllCurve& E, std::uint64_t p) {
  if (p < kNaiveTraceBound) return ec_trace_naive(E, p);
  return ec_trace_bsgs(E, p);
}

}  // namespace bpe
