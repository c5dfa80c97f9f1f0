#pragma once

// Dirichlet convolution over an arbitrary coefficient ring.
//
// Arithmetic functions are stored 1-based in 0-based containers:
// f[i] holds f(i + 1), so a span of length N carries f(1..N).

#include <cstddef>
#include <span>
#include <vector>

#include "bpe/arith/ring.hpp"

namespace bpe {

// (f * g)(n) = sum_{d | n} f(d) g(n/d), for n = 1..min(|f|, |g|).
template <class T>
std::vector<T> dirichlet_convolve(std::span<const T> f, std::span<const T> g) {
  std::size_t n = std::min(f.size(), g.size());
  if (n == 0) return {};
  std::vector<T> out(n, zero_like(f[0]));
  for (std::size_t d = 1; d <= n; ++d)
    for (std::size_t m = d; m <= n; m += d) out[m - 1] = out[m - 1] + f[d - 1] * g[m / d - 1];
  return out;
}

// nu with (f * nu)(1) = 1 and (f * nu)(n) = 0 for 2 <= n <= N:
//   nu(1) = f(1)^-1,  nu(n) = -f(1)^-1 sum_{d | n, d < n} nu(d) f(n/d).
// Throws DomainError("no Dirichlet inverse") when f(1) is not a unit.
template <class T>
std::vector<T> dirichlet_inverse(std::span<const T> f) {
  std::size_t n = f.size();
  if (n == 0) return {};
  T inv = zero_like(f[0]);
  try {
    inv = inverse(f[0]);
  } catch (const DomainError&) {
    throw DomainError("no Dirichlet inverse: f(1) is not invertible");
  }
  // acc[m] accumulates sum_{d | m, d < m} nu(d) f(m/d) as nu(d) becomes known.
  std::vector<T> acc(n, zero_like(f[0]));
  std::vector<T> nu;
  nu.reserve(n);
  for (std::size_t d = 1; d <= n; ++d) {
    T v = d == 1 ? inv : T(-(inv * acc[d - 1]));
    for (std::size_t m = 2 * d; m <= n; m += d) acc[m - 1] = acc[m - 1] + v * f[m / d - 1];
    nu.push_back(std::move(v));
  }
  return nu;
}

template <class T>
std::vector<T> dirichlet_inverse(const std::vector<T>& f) {
  return dirichlet_inverse(std::span<const T>(f));
}

template <class T>
std::vector<T> dirichlet_convolve(const std::vector<T>& f, const std::vector<T>& g) {
  return dirichlet_convolve(std::span<const T>(f), std::span<const T>(g));
}

}  // namespace bpe
