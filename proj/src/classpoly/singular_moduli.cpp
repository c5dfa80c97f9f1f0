#include "bpe/classpoly/singular_moduli.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "bpe/error.hpp"
#include "bpe/qseries/modular_forms.hpp"

namespace bpe {

std::vector<Integer> j_coefficients(int M) {
  static std::mutex mu;
  static std::vector<Integer> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (int(cache.size()) < M + 2) {
    int target = std::max(M, 2 * (int(cache.size()) - 2));
    auto j = jfunction(target, Integer(0));
    cache.assign(j.coefficients().begin(), j.coefficients().end());
  }
  return std::vector<Integer>(cache.begin(), cache.begin() + (M + 2));
}

int j_terms_needed(long long d, long long a, long digits) {
  const double r = std::numbers::pi * std::sqrt(double(d)) / double(a);
  const double target = -double(digits) * std::log(10.0) - 10.0;
  for (int n = 1;; ++n) {
    double expo = 4.0 * std::numbers::pi * std::sqrt(double(n)) - double(n) * r;
    // past the maximum of the exponent, and the tail ratio |q| e^{...} < 1/2
    if (expo < target && 2.0 * std::numbers::pi / std::sqrt(double(n)) < r - std::log(2.0)) return n;
    if (n > 10000000) throw ResourceError("j_terms_needed: no convergence");
  }
}

BigComplex singular_modulus(const QuadForm& Q, long digits) {
  if (digits < 30) throw InputError("singular_modulus: precision must be >= 30 digits");
  const long long d = -Q.discriminant();
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const int M = j_terms_needed(d, Q.a, digits + 10);
  auto c = j_coefficients(M);

  // q = exp(2 pi i tau), tau = (-b + i sqrt d) / (2a)
  BigFloat pi = BigFloat::pi(bits);
  BigFloat A(Integer(static_cast<long>(Q.a)), bits);
  BigFloat r = pi * BigFloat(Integer(static_cast<long>(d)), bits).sqrt() / A;  // -log|q|
  BigFloat theta = -(pi * BigFloat(Integer(static_cast<long>(Q.b)), bits) / A);
  BigFloat s(bits), co(bits);
  theta.sin_cos(s, co);
  BigFloat mag = (-r).exp();
  BigComplex q(mag * co, mag * s);

  // Horner over c(0..M), then add q^-1 = conj(q) / |q|^2 = exp(r) e^{-i theta}
  BigComplex acc(BigFloat(c[std::size_t(M) + 1], bits), BigFloat(bits));
  for (int n = M - 1; n >= 0; --n) {
    acc = acc * q;
    acc.re = acc.re + BigFloat(c[std::size_t(n) + 1], bits);
  }
  BigFloat inv = r.exp();
  BigComplex qinv(inv * co, -(inv * s));
  return acc + qinv;
}

}  // namespace bpe
