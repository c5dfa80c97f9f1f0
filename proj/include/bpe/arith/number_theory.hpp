#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bpe/arith/ring.hpp"

namespace bpe {

// Kronecker symbol (a/n) with the usual conventions:
//   (a/1) = 1, (a/0) = [a = +-1],
//   (a/2) = 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8),
//   (a/-1) = -1 if a < 0 else 1, and (a/n) = (a/-1)(a/|n|) for n < 0.
int kronecker(long long a, long long n);

// B_m for m = 0 or even m >= 2, exact. Odd m > 1 is rejected.
const Rational& bernoulli(int m);

// sum_{d | n} d^k.
Integer sigma(unsigned k, std::uint64_t n);

int moebius(std::uint64_t n);

// Trial division; (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

// True for discriminants of quadratic fields (either sign); 1 is not fundamental.
bool is_fundamental_discriminant(long long D);

// -d is a discriminant, i.e. d > 0 and d = 0, 3 (mod 4).
bool is_negative_discriminant(long long d);

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
// Inverse of a modulo m via extended Euclid; throws DomainError if gcd != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace bpe
