#include "bpe/ssforms/supersingular.hpp"

#include <string>

#include "bpe/arith/number_theory.hpp"
#include "bpe/arith/quad_ext.hpp"
#include "bpe/error.hpp"
#include "bpe/qseries/modular_forms.hpp"
#include "bpe/ssforms/weight.hpp"

namespace bpe {

namespace {

void require_ell(std::uint32_t ell, std::uint32_t max_ell) {
  if (ell < 5 || !is_prime(ell)) throw InputError("ell must be a prime >= 5, got " + std::to_string(ell));
  if (ell > max_ell)
    throw CapabilityError("ell = " + std::to_string(ell) + " exceeds the enumeration limit " + std::to_string(max_ell));
}

}  // namespace

SupersingularPoly supersingular_poly(std::uint32_t ell) {
  require_ell(ell, 1u << 20);
  PrimeField F(ell);
  const ModPrime z = F.zero();
  auto w = weight_decomposition(int(ell) - 1);
  const int N = 2 * w.m + 12;
  auto denom = monomial_series(Monomial{w.m, w.delta, w.epsilon}, N, z);
  auto quotient = eisenstein(int(ell) - 1, N, z) / denom;
  Poly<ModPrime> etilde = Poly<ModPrime>::zero(z);
  try {
    etilde = as_j_polynomial(quotient);
  } catch (const DomainError& e) {
    throw ConsistencyError("supersingular_poly(" + std::to_string(ell) + "): " + e.what());
  }
  Poly<ModPrime> s = etilde;
  for (int i = 0; i < w.delta; ++i) s = s * Poly<ModPrime>::x(z);
  if (w.epsilon) s = s * Poly<ModPrime>::linear(F(1728));
  if (s.is_zero()) throw ConsistencyError("supersingular_poly: vanishing polynomial");
  int sign = s.leading() == F.one() ? 1 : (s.leading() == F(-1) ? -1 : 0);
  return {ell, s.monic(), sign};
}

namespace {

// F_{ell^2} = F_ell[sqrt(nr)] with nr the least non-residue. Elements are
// packed as a + b*ell for table lookups.
struct Fq {
  std::uint32_t p;
  std::uint32_t nr;
  std::vector<signed char> chi;  // quadratic character of F_{p^2}, by packed index

  explicit Fq(std::uint32_t ell) : p(ell), nr(PrimeField(ell).non_residue().value()) {
    // x in F_{p^2} is a square iff its norm is a square in F_p.
    PrimeField F(ell);
    std::vector<signed char> leg(p);
    for (std::uint32_t v = 0; v < p; ++v) leg[v] = static_cast<signed char>(F.legendre(F(v)));
    chi.resize(std::size_t(p) * p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        std::uint64_t n = (std::uint64_t(a) * a + std::uint64_t(p - nr) * b % p * b) % p;
        chi[a + std::size_t(b) * p] = leg[n];
      }
  }

  struct E {
    std::uint64_t a, b;
  };
  E add(E x, E y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  E mul(E x, E y) const { return {(x.a * y.a + x.b * y.b % p * nr) % p, (x.a * y.b + x.b * y.a) % p}; }
  int character(E x) const { return chi[x.a + x.b * p]; }

  E inv(E x) const {
    std::uint64_t n = (x.a * x.a + (p - nr) * (x.b * x.b % p)) % p;
    std::uint64_t ni = invmod(n, p);
    return {x.a * ni % p, (p - x.b) % p * ni % p};
  }

  // sum_x chi(x^3 + A x + B) over F_{p^2}; the trace is minus this sum.
  long long character_sum(E A, E B) const {
    long long s = 0;
    for (std::uint64_t xb = 0; xb < p; ++xb)
      for (std::uint64_t xa = 0; xa < p; ++xa) {
        E x{xa, xb};
        E rhs = add(mul(add(mul(x, x), A), x), B);
        s += character(rhs);
      }
    return s;
  }
};

std::vector<std::pair<std::uint32_t, std::uint32_t>> supersingular_j_all(std::uint32_t ell) {
  require_ell(ell, 100);
  Fq q(ell);
  const std::uint64_t p = ell;
  const std::uint64_t j1728 = 1728 % p;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint64_t jb = 0; jb < p; ++jb)
    for (std::uint64_t ja = 0; ja < p; ++ja) {
      Fq::E j{ja, jb}, A{0, 0}, B{0, 0};
      if (ja == 0 && jb == 0) {
        B = {1, 0};  // y^2 = x^3 + 1
      } else if (ja == j1728 && jb == 0) {
        A = {1, 0};  // y^2 = x^3 + x
      } else {
        // k = j / (1728 - j); y^2 = x^3 + 3k x + 2k has invariant j
        Fq::E k = q.mul(j, q.inv(Fq::E{(j1728 + p - ja) % p, (p - jb) % p}));
        A = q.mul(Fq::E{3, 0}, k);
        B = q.mul(Fq::E{2, 0}, k);
      }
      long long trace = -q.character_sum(A, B);
      if (((trace % (long long)p) + (long long)p) % (long long)p == 0) out.emplace_back(std::uint32_t(ja), std::uint32_t(jb));
    }
  return out;
}

}  // namespace

Poly<ModPrime> supersingular_poly_bruteforce(std::uint32_t ell) {
  auto roots = supersingular_j_all(ell);
  PrimeField F(ell);
  std::int64_t nr = F.non_residue().value();
  QuadMod zero(F.zero(), F.zero(), nr);
  Poly<QuadMod> prod = Poly<QuadMod>::constant(one_like(zero));
  for (auto [a, b] : roots) prod = prod * Poly<QuadMod>::linear(QuadMod(F(a), F(b), nr));
  std::vector<ModPrime> c;
  for (const auto& x : prod.coefficients()) {
    if (!x.is_rational()) throw ConsistencyError("supersingular_poly_bruteforce: product not defined over F_ell");
    c.push_back(x.a());
  }
  return Poly<ModPrime>(std::move(c), F.zero());
}

std::vector<std::uint32_t> supersingular_j_in_prime_field(std::uint32_t ell) {
  std::vector<std::uint32_t> out;
  for (auto [a, b] : supersingular_j_all(ell))
    if (b == 0) out.push_back(a);
  return out;
}

}  // namespace bpe
