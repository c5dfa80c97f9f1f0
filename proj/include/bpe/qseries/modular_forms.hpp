#pragma once

// Level-one q-expansions: Eisenstein series, Delta, j, and monomials
// Delta^a E4^b E6^c. All functions take an explicit truncation order N and a
// prototype element fixing the coefficient ring.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bpe/arith/number_theory.hpp"
#include "bpe/arith/ring.hpp"
#include "bpe/error.hpp"
#include "bpe/qseries/poly.hpp"
#include "bpe/qseries/qseries.hpp"

namespace bpe {

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n to order N. k = 2 gives the
// quasi-modular E_2. Over F_ell the factor 2k/B_k is reduced as a rational, so
// a DomainError means ell divides the numerator of B_k/k.
template <class T>
QSeries<T> eisenstein(int k, int N, const T& proto) {
  if (k < 2 || k % 2 != 0) throw InputError("eisenstein: weight must be even and >= 2, got " + std::to_string(k));
  if (N < 0) throw InputError("eisenstein: order must be >= 0");
  const T zero = zero_like(proto);
  T factor = from_rational(proto, Rational(-2 * k) / bernoulli(k));
  std::vector<T> c(static_cast<std::size_t>(N) + 1, zero);
  c[0] = one_like(proto);
  if (is_zero(factor)) return QSeries<T>(0, N, std::move(c), zero);
  // divisor-power sieve: c[n] accumulates sum_{d | n} d^(k-1)
  for (int d = 1; d <= N; ++d) {
    T pw = power(from_integer(proto, static_cast<long long>(d)), static_cast<std::uint64_t>(k - 1));
    for (int m = d; m <= N; m += d) c[std::size_t(m)] = c[std::size_t(m)] + pw;
  }
  for (int n = 1; n <= N; ++n) c[std::size_t(n)] = c[std::size_t(n)] * factor;
  return QSeries<T>(0, N, std::move(c), zero);
}

// prod_{n >= 1} (1 - q^n) to order N, from Euler's pentagonal number theorem.
template <class T>
QSeries<T> euler_product(int N, const T& proto) {
  std::vector<T> c(static_cast<std::size_t>(std::max(N, -1) + 1), zero_like(proto));
  for (long long k = 0;; ++k) {
    long long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 > N) break;
    T sign = from_integer(proto, k % 2 == 0 ? 1LL : -1LL);
    c[std::size_t(e1)] = c[std::size_t(e1)] + sign;
    if (k > 0 && e2 <= N) c[std::size_t(e2)] = c[std::size_t(e2)] + sign;
  }
  return QSeries<T>(0, N, std::move(c), zero_like(proto));
}

// Delta = q prod (1 - q^n)^24 to order N, by 24 sparse multiplications by the
// pentagonal series.
template <class T>
QSeries<T> delta(int N, const T& proto) {
  if (N < 1) throw InputError("delta: order must be >= 1");
  const int M = N - 1;  // order of the eta^24 / q part
  const T zero = zero_like(proto);
  std::vector<std::pair<int, T>> pent;
  {
    auto e = euler_product(M, proto);
    for (int i = 0; i <= M; ++i)
      if (!is_zero(e[i])) pent.emplace_back(i, e[i]);
  }
  std::vector<T> acc(std::size_t(M) + 1, zero);
  acc[0] = one_like(proto);
  for (int rep = 0; rep < 24; ++rep) {
    std::vector<T> next(std::size_t(M) + 1, zero);
    for (int i = 0; i <= M; ++i) {
      if (is_zero(acc[std::size_t(i)])) continue;
      for (const auto& [e, s] : pent) {
        if (i + e > M) break;
        next[std::size_t(i + e)] = next[std::size_t(i + e)] + acc[std::size_t(i)] * s;
      }
    }
    acc = std::move(next);
  }
  return QSeries<T>(1, N, std::move(acc), zero);
}

// j = E4^3 / Delta, lead -1, to order N.
template <class T>
QSeries<T> jfunction(int N, const T& proto) {
  if (N < -1) throw InputError("jfunction: order must be >= -1");
  int M = N + 2;
  auto e4 = eisenstein(4, M, proto);
  auto j = (e4 * e4 * e4) / delta(M, proto);
  return j.truncated(N);
}

// The polynomial P with P(j) = f, for f of weight 0 with a pole only at the
// cusp. Needs f known to order >= 0; the residual after eliminating the
// principal part must vanish through f's order.
template <class T>
Poly<T> as_j_polynomial(const QSeries<T>& f) {
  const T zero = f.zero_value();
  if (f.order() < 0) throw TruncationError("as_j_polynomial: series must be known through q^0");
  int m = std::max(0, -std::min(f.lead(), f.valuation()));
  int N = f.order();
  // jq = q*j has lead 0; (jq)^k known to order N + m gives j^k to order N + m - k >= N.
  auto jq = jfunction(N + m, one_like(zero)).shifted(1);
  std::vector<QSeries<T>> jpow;
  jpow.push_back(QSeries<T>::constant(one_like(zero), N + m));
  for (int k = 1; k <= m; ++k) jpow.push_back(jpow.back() * jq);
  QSeries<T> residual = f;
  std::vector<T> coeffs(std::size_t(m) + 1, zero);
  for (int k = m; k >= 0; --k) {
    T c = residual[-k];
    coeffs[std::size_t(k)] = c;
    if (is_zero(c)) continue;
    residual = residual - jpow[std::size_t(k)].shifted(-k).scaled(c);
  }
  for (int e = std::min(residual.lead(), 0); e <= N; ++e) {
    if (!is_zero(residual[e]))
      throw DomainError("not a polynomial in j: residual coefficient at q^" + std::to_string(e));
  }
  return Poly<T>(std::move(coeffs), zero);
}

// Exponents (a, b, c) of Delta^a E4^b E6^c with 12a + 4b + 6c = k and
// b in {0, 1, 2}; one monomial per a, so the list is a basis of M_k (or of S_k
// with cusp_only, which requires a >= 1). Sorted by decreasing a.
struct Monomial {
  int a, b, c;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::vector<Monomial> monomial_basis(int k, bool cusp_only);

// dim S_k for level one.
int cusp_dimension(int k);

std::string to_string(const Monomial& m);

template <class T>
QSeries<T> monomial_series(const Monomial& mono, int N, const T& proto) {
  auto result = QSeries<T>::constant(one_like(proto), N);
  if (mono.a > 0) result = result * delta(N, proto).pow(unsigned(mono.a));
  if (mono.b > 0) result = result * eisenstein(4, N, proto).pow(unsigned(mono.b));
  if (mono.c > 0) result = result * eisenstein(6, N, proto).pow(unsigned(mono.c));
  return result.truncated(N);
}

}  // namespace bpe
