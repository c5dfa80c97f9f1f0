#include "bpe/borcherds/twisted.hpp"

#include "bpe/arith/dirichlet.hpp"
#include "bpe/arith/number_theory.hpp"
#include "bpe/error.hpp"
#include "bpe/qseries/twisted.hpp"

namespace bpe {

std::vector<QuadRational> nu_sequence(long long D, int N) {
  if (N < 1) throw InputError("nu needs N >= 1");
  auto nu = dirichlet_inverse(pd_log_coeffs(D, N));
  for (int m = 1; m <= N; ++m) {
    QuadRational closed(0, make_rational(long(moebius(std::uint64_t(m)) * kronecker(D, m)), long(D)), D);
    if (nu[std::size_t(m - 1)] != closed)
      throw ConsistencyError("nu(" + std::to_string(m) + ") for D = " + std::to_string(D) +
                             " disagrees with mu(m)(D/m)/sqrt(D)");
  }
  return nu;
}

QuadRational nu(long long D, int m) { return nu_sequence(D, m).back(); }

std::vector<QuadRational> twisted_forward(long long D, const std::vector<Integer>& A, int N) {
  if (N < 1 || std::size_t(N) > A.size()) throw InputError("twisted map needs 1 <= N <= |A|");
  auto f = pd_log_coeffs(D, N);
  std::vector<QuadRational> mA;
  mA.reserve(std::size_t(N));
  for (int m = 1; m <= N; ++m) mA.emplace_back(Rational(m * A[std::size_t(m - 1)]), Rational(0), D);
  return dirichlet_convolve(mA, f);
}

std::vector<Integer> twisted_roundtrip(long long D, const std::vector<Integer>& A, int N) {
  auto g = twisted_forward(D, A, N);
  auto back = dirichlet_convolve(nu_sequence(D, N), g);
  std::vector<Integer> out;
  out.reserve(std::size_t(N));
  for (int n = 1; n <= N; ++n) {
    const auto& v = back[std::size_t(n - 1)];
    Rational a = v.a() / n;
    if (!v.is_rational() || a.get_den() != 1)
      throw ConsistencyError("twisted round trip produced a non-integer at n = " + std::to_string(n));
    out.push_back(a.get_num());
  }
  return out;
}

}  // namespace bpe
