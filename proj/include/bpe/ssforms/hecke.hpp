#pragma once

#include <string>

#include "bpe/qseries/qseries.hpp"

namespace bpe {

// T_p on a level-one expansion of weight k: b(n) = a(pn) + p^(k-1) a(n/p).
// The output is known to order N = floor(order(f) / p); pass N to ask for a
// specific order (TruncationError if f is too short).
template <class T>
QSeries<T> hecke_Tp(const QSeries<T>& f, unsigned p, int k, int N = -1) {
  if (f.lead() < 0) throw InputError("hecke_Tp: series must have no polar part");
  int max_order = f.order() / int(p);
  if (N < 0) N = max_order;
  if (N > max_order)
    throw TruncationError("hecke_Tp: output order " + std::to_string(N) + " needs input to q^" +
                          std::to_string(std::int64_t(p) * N) + ", have q^" + std::to_string(f.order()));
  const T& zero = f.zero_value();
  T pk = power(from_integer(zero, static_cast<long long>(p)), static_cast<std::uint64_t>(k - 1));
  std::vector<T> c;
  c.reserve(std::size_t(N) + 1);
  for (int n = 0; n <= N; ++n) {
    T v = f[int(p) * n];
    if (n % int(p) == 0) v = v + pk * f[n / int(p)];
    c.push_back(v);
  }
  return QSeries<T>(0, N, std::move(c), zero);
}

}  // namespace bpe
