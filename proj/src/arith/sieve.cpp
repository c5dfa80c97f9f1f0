#include "bpe/arith/sieve.hpp"

#include <string>

#include "bpe/error.hpp"

namespace bpe {

PrimeStream sieve(std::uint64_t X) {
  if (X < 2) throw InputError("sieve bound must be >= 2");
  if (X > kMaxSieveBound)
    throw ResourceError("sieve bound " + std::to_string(X) + " exceeds the supported maximum " +
                        std::to_string(kMaxSieveBound));
  std::vector<std::uint32_t> primes;
  if (X > 2) primes.push_back(2);
  // composite[i] describes 2i + 1.
  std::uint64_t half = X / 2;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    std::uint64_t p = 2 * i + 1;
    if (p >= X) break;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  return PrimeStream(X, std::move(primes));
}

}  // namespace bpe
