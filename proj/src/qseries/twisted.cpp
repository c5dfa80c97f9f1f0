#include "bpe/qseries/twisted.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bpe/arith/number_theory.hpp"
#include "bpe/error.hpp"

namespace bpe {

namespace {

void require_real_fundamental(long long D) {
  if (D <= 1 || !is_fundamental_discriminant(D))
    throw InputError("D = " + std::to_string(D) + " is not a positive fundamental discriminant > 1");
}

}  // namespace

QuadRational f2(long long D, long long r) {
  require_real_fundamental(D);
  if (r < 1) throw InputError("f2: index must be >= 1");
  return QuadRational(Rational(0), Rational(kronecker(D, r)), D);
}

std::complex<double> f2_numeric(long long D, long long r) {
  require_real_fundamental(D);
  std::complex<double> s = 0;
  for (long long k = 1; k < D; ++k) {
    int chi = kronecker(D, k);
    if (chi == 0) continue;
    double angle = 2.0 * std::numbers::pi * double((k * r) % D) / double(D);
    s += double(chi) * std::polar(1.0, angle);
  }
  return s;
}

std::vector<QuadRational> pd_log_coeffs(long long D, int N) {
  require_real_fundamental(D);
  std::vector<QuadRational> out;
  out.reserve(std::size_t(std::max(N, 0)));
  for (int r = 1; r <= N; ++r) out.push_back(f2(D, r));
  return out;
}

}  // namespace bpe
