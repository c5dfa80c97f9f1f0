#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bpe {

// The primes p < bound, ascending.
class PrimeStream {
 public:
  PrimeStream(std::uint64_t bound, std::vector<std::uint32_t> primes)
      : bound_(bound), primes_(std::move(primes)) {}

  std::uint64_t bound() const { return bound_; }
  std::size_t count() const { return primes_.size(); }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> primes_;
};

// Largest bound sieve() accepts: primes must fit the 32-bit storage.
inline constexpr std::uint64_t kMaxSieveBound = std::uint64_t(1) << 32;

// Sieve of Eratosthenes over odd numbers. Requires 2 <= X <= kMaxSieveBound;
// larger bounds raise ResourceError.
PrimeStream sieve(std::uint64_t X);

}  // namespace bpe
