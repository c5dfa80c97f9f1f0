#include <cmath>
#include <random>

#include "bpe/arith/number_theory.hpp"
#include "bpe/qseries/modular_forms.hpp"
#include "bpe/qseries/poly.hpp"
#include "bpe/qseries/twisted.hpp"
#include "doctest.h"

using namespace bpe;

namespace {

// Naive convolution of two Laurent series given as (lead, coefficient list).
template <class T>
std::vector<T> convolve_oracle(const std::vector<T>& a, const std::vector<T>& b, std::size_t n, const T& zero) {
  std::vector<T> out(n, zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (i + j < n) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

// tau(n) from the product definition with plain Integer multiplication.
std::vector<Integer> tau_oracle(int N) {
  std::vector<Integer> p(N, 0);
  p[0] = 1;
  for (int n = 1; n < N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N - 1; i >= n; --i) p[i] -= p[i - n];
  return p;  // p[i] = tau(i + 1)
}

}  // namespace

TEST_CASE("eisenstein examples") {
  auto e4 = eisenstein(4, 2, Integer(0));
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  auto e2 = eisenstein(2, 1, Integer(0));
  CHECK(e2[1] == -24);
  CHECK(eisenstein(12, 0, Rational(0))[0] == 1);
  CHECK(eisenstein(6, 3, Integer(0)).render() == "1 + -504*q + -16632*q^2 + -122976*q^3 + O(q^4)");
  CHECK_THROWS_AS(eisenstein(3, 3, Integer(0)), InputError);
}

TEST_CASE("delta and j leading coefficients") {
  auto d = delta(6, Integer(0));
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
  CHECK(d[5] == 4830);
  CHECK(d[6] == -6048);
  auto j = jfunction(2, Integer(0));
  CHECK(j.lead() == -1);
  CHECK(j[-1] == 1);
  CHECK(j[0] == 744);
  CHECK(j[1] == 196884);
  CHECK(j[2] == 21493760);
  CHECK_THROWS_AS(j[3], TruncationError);
}

TEST_CASE("delta matches the product oracle and the E4/E6 identity to 300 terms") {
  const int N = 300;
  auto d = delta(N, Integer(0));
  auto tau = tau_oracle(N);
  for (int n = 1; n <= N; ++n) CHECK(d[n] == tau[n - 1]);
  auto e4 = eisenstein(4, N, Integer(0)), e6 = eisenstein(6, N, Integer(0));
  auto diff = e4 * e4 * e4 - e6 * e6;
  for (int n = 0; n <= N; ++n) CHECK(diff[n] == 1728 * d[n]);
}

TEST_CASE("j times Delta is E4 cubed to 300 terms") {
  const int N = 300;
  auto j = jfunction(N, Integer(0));
  auto d = delta(N + 1, Integer(0));
  auto e4 = eisenstein(4, N, Integer(0));
  auto prod = j * d;
  auto cube = e4 * e4 * e4;
  CHECK(prod.order() >= N);
  for (int n = 0; n <= N; ++n) CHECK(prod[n] == cube[n]);
}

TEST_CASE("Eisenstein congruences mod ell to 500 terms") {
  for (std::uint32_t ell : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    PrimeField F(ell);
    auto lo = eisenstein(int(ell) - 1, 500, F.zero());
    auto hi = eisenstein(int(ell) + 1, 500, F.zero());
    auto e2 = eisenstein(2, 500, F.zero());
    for (int n = 0; n <= 500; ++n) {
      CHECK(lo[n] == (n == 0 ? F.one() : F.zero()));
      CHECK(hi[n] == e2[n]);
    }
  }
}

TEST_CASE("as_j_polynomial") {
  const int N = 20;
  auto j = jfunction(N, Integer(0));
  CHECK(as_j_polynomial(j) == Poly<Integer>::x(Integer(0)));
  CHECK(as_j_polynomial(QSeries<Integer>::constant(Integer(1), N)) == Poly<Integer>::constant(Integer(1)));
  auto shifted = j - QSeries<Integer>::constant(Integer(744), N);
  CHECK(as_j_polynomial(shifted) == Poly<Integer>({Integer(-744), Integer(1)}, Integer(0)));
  auto jk = QSeries<Integer>::constant(Integer(1), N);
  auto jext = jfunction(N + 6, Integer(0));
  for (int k = 1; k <= 5; ++k) {
    jk = jk * jext;
    std::vector<Integer> xk(k + 1, 0);
    xk[k] = 1;
    CHECK(as_j_polynomial(jk.truncated(std::min(jk.order(), N))) == Poly<Integer>(xk, Integer(0)));
  }
  auto d = delta(N, Integer(0));
  CHECK_THROWS_AS(as_j_polynomial(d.shifted(-2)), DomainError);
}

TEST_CASE("monomial basis") {
  CHECK(monomial_basis(32, true) == std::vector<Monomial>{{2, 2, 0}, {1, 2, 2}});
  CHECK(monomial_basis(12, true) == std::vector<Monomial>{{1, 0, 0}});
  CHECK(monomial_basis(16, true) == std::vector<Monomial>{{1, 1, 0}});
  CHECK(monomial_basis(14, true).empty());
  for (int k = 0; k <= 120; k += 2) {
    CHECK(int(monomial_basis(k, true).size()) == cusp_dimension(k));
    for (auto m : monomial_basis(k, false)) CHECK(12 * m.a + 4 * m.b + 6 * m.c == k);
  }
  CHECK(cusp_dimension(12) == 1);
  CHECK(cusp_dimension(14) == 0);
  CHECK(cusp_dimension(24) == 2);
  CHECK(cusp_dimension(26) == 1);
}

TEST_CASE("series product matches the convolution oracle on random sparse inputs") {
  std::mt19937_64 rng(5);
  for (std::uint32_t ell : {11u, 31u, 1000003u}) {
    PrimeField F(ell);
    for (int it = 0; it < 12; ++it) {
      int na = 1 + int(rng() % 400), nb = 1 + int(rng() % 400);
      std::vector<ModPrime> a(na, F.zero()), b(nb, F.zero());
      for (auto& x : a)
        if (rng() % 3 == 0) x = F(static_cast<long long>(rng() % ell));
      for (auto& x : b)
        if (rng() % 3 == 0) x = F(static_cast<long long>(rng() % ell));
      a[0] = F(1);
      b[0] = F(2);
      auto sa = QSeries<ModPrime>::from_coefficients(0, a, F.zero());
      auto sb = QSeries<ModPrime>::from_coefficients(0, b, F.zero());
      auto p = sa * sb;
      auto oracle = convolve_oracle(a, b, std::size_t(p.order() + 1), F.zero());
      for (int n = 0; n <= p.order(); ++n) CHECK(p[n] == oracle[std::size_t(n)]);
    }
  }
  for (int it = 0; it < 5; ++it) {
    std::vector<Integer> a(60), b(60);
    for (auto& x : a) x = long(rng() % 2001) - 1000;
    for (auto& x : b) x = long(rng() % 2001) - 1000;
    a[0] = 1;
    b[0] = 1;
    auto p = QSeries<Integer>::from_coefficients(-3, a, 0) * QSeries<Integer>::from_coefficients(2, b, 0);
    auto oracle = convolve_oracle(a, b, 60, Integer(0));
    CHECK(p.lead() == -1);
    for (int n = 0; n < 60; ++n) CHECK(p[n - 1] == oracle[n]);
  }
}

TEST_CASE("series division and log derivative") {
  auto e4 = eisenstein(4, 30, Rational(0));
  auto e6 = eisenstein(6, 30, Rational(0));
  auto q = (e4 * e6) / e6;
  for (int n = 0; n <= 30; ++n) CHECK(q[n] == e4[n]);
  // theta(Delta)/Delta = E2
  auto d = delta(31, Rational(0));
  auto ld = log_derivative(d);
  auto e2 = eisenstein(2, 30, Rational(0));
  for (int n = 0; n <= 30; ++n) CHECK(ld[n] == e2[n]);
}

TEST_CASE("polynomials") {
  PrimeField F(11);
  using P = Poly<ModPrime>;
  P f({F(0), F(10), F(1)}, F.zero());  // x^2 - x = x(x - 1)
  CHECK(divides(P::linear(F(1)), f));
  CHECK(divides(P::linear(F(0)), f));
  CHECK_FALSE(divides(P::linear(F(2)), f));
  CHECK(is_squarefree(f));
  CHECK_FALSE(is_squarefree(f * f));
  CHECK(gcd(f, P::linear(F(1)) * P::linear(F(3))) == P::linear(F(1)));
  auto [qq, r] = divmod(f * P::linear(F(5)) + P::constant(F(3)), f);
  CHECK(qq == P::linear(F(5)));
  CHECK(r == P::constant(F(3)));
  CHECK(f.render() == "x^2 + 10*x");
  // x^11 is an 11th power: its derivative vanishes mod 11
  std::vector<ModPrime> c(12, F.zero());
  c[11] = F(1);
  CHECK_FALSE(is_squarefree(P(c, F.zero())));
}

TEST_CASE("f2 closed form against direct Gauss sums") {
  CHECK(f2(5, 1) == QuadRational(0, 1, 5));
  CHECK(f2(5, 5) == QuadRational(0, 0, 5));
  CHECK(f2(8, 3) == QuadRational(0, -1, 8));
  CHECK(std::abs(f2_numeric(5, 1).real() - std::sqrt(5.0)) < 1e-12);
  for (long long D = 2; D <= 40; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    for (long long r = 1; r <= 2 * D; ++r) {
      auto exact = f2(D, r);
      double v = exact.b().get_d() * std::sqrt(double(D));
      auto num = f2_numeric(D, r);
      CHECK(std::abs(num.real() - v) < 1e-9);
      CHECK(std::abs(num.imag()) < 1e-9);
    }
  }
  CHECK_THROWS_AS(f2(4, 1), InputError);
  CHECK_THROWS_AS(f2(1, 1), InputError);
  auto c = pd_log_coeffs(5, 10);
  CHECK(c[0] == f2(5, 1));
  CHECK(c[4] == QuadRational(0, 0, 5));
}
