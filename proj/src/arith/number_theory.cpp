#include "bpe/arith/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

namespace bpe {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw InputError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

namespace {

int kronecker_two(long long a) {
  if (a % 2 == 0) return 0;
  long long r = ((a % 8) + 8) % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -1;
  }
  // Pull out the powers of two from n.
  while (n % 2 == 0) {
    n /= 2;
    int k = kronecker_two(a);
    if (k == 0) return 0;
    result *= k;
  }
  if (n == 1) return result;
  // Jacobi symbol (a/n) for odd positive n.
  long long m = ((a % n) + n) % n;
  while (m != 0) {
    while (m % 2 == 0) {
      m /= 2;
      long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(m, n);
    if (m % 4 == 3 && n % 4 == 3) result = -result;
    m %= n;
  }
  return n == 1 ? result : 0;
}

const Rational& bernoulli(int m) {
  if (m < 0) throw InputError("bernoulli: negative index");
  if (m % 2 == 1 && m > 1) throw InputError("bernoulli: odd index " + std::to_string(m) + " > 1 is zero");

  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
  std::lock_guard<std::mutex> lock(mutex);
  // Sum_{j=0}^{k} C(k+1, j) B_j = 0.
  while (static_cast<int>(table.size()) <= m) {
    int k = static_cast<int>(table.size());
    Rational acc = 0;
    Integer binom = 1;  // C(k+1, j)
    for (int j = 0; j < k; ++j) {
      if (!(j % 2 == 1 && j > 1)) acc += binom * table[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    Rational b = -acc / Rational(k + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[m];
}

Integer sigma(unsigned k, std::uint64_t n) {
  if (n == 0) throw InputError("sigma: n must be >= 1");
  Integer total = 0;
  for (std::uint64_t d : divisors(n)) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, k);
    total += t;
  }
  return total;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw InputError("moebius: n must be >= 1");
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (n == 0) throw InputError("factorize: n must be >= 1");
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t count = out.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

namespace {

bool squarefree(std::uint64_t n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

}  // namespace

bool is_fundamental_discriminant(long long D) {
  if (D == 0 || D == 1) return false;
  long long r = ((D % 4) + 4) % 4;
  std::uint64_t a = static_cast<std::uint64_t>(D < 0 ? -D : D);
  if (r == 1) return squarefree(a);
  if (r != 0) return false;
  long long m = D / 4;
  long long rm = ((m % 4) + 4) % 4;
  if (rm != 2 && rm != 3) return false;
  return squarefree(a / 4);
}

bool is_negative_discriminant(long long d) { return d > 0 && (d % 4 == 0 || d % 4 == 3); }

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (e != 0) {
    if (e & 1U) result = result * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DomainError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace bpe
