#include <cstdint>
#include <vector>

#include "bpe/qseries/qseries.hpp"

namespace bpe::detail {

template <>
std::vector<Integer> mul_truncated(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n,
                                   const Integer& zero) {
  std::vector<Integer> out(n, zero);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    std::size_t jmax = std::min(b.size(), n - i);
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < jmax; ++j) mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
  }
  return out;
}

namespace {

using Word = std::uint64_t;

constexpr std::size_t kKaratsubaCutoff = 48;

// Full product of a[0..n) and b[0..n), both reduced mod p, into out[0..2n-1).
// Values stay reduced on return.
void karatsuba(const Word* a, const Word* b, std::size_t n, Word* out, Word p, std::vector<Word>& scratch) {
  if (n <= kKaratsubaCutoff) {
    // p < 2^32, so each product is < 2^64 and must be reduced before summing.
    for (std::size_t i = 0; i < 2 * n - 1; ++i) out[i] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Word s = out[i + j] + a[i] * b[j] % p;
        out[i + j] = s >= p ? s - p : s;
      }
    }
    return;
  }
  std::size_t h = n / 2;
  std::size_t hi = n - h;  // hi >= h
  std::size_t base = scratch.size();
  scratch.resize(base + 2 * hi + 2 * (2 * hi - 1));
  Word* sa = scratch.data() + base;
  Word* sb = sa + hi;
  Word* mid = sb + hi;
  Word* tmp = mid + (2 * hi - 1);
  for (std::size_t i = 0; i < hi; ++i) {
    Word x = (i < h ? a[i] : 0) + a[h + i];
    Word y = (i < h ? b[i] : 0) + b[h + i];
    sa[i] = x >= p ? x - p : x;
    sb[i] = y >= p ? y - p : y;
  }
  // low * low into out[0..2h-1), high * high into out[2h..2n-1)
  karatsuba(a, b, h, out, p, scratch);
  sa = scratch.data() + base;
  sb = sa + hi;
  mid = sb + hi;
  tmp = mid + (2 * hi - 1);
  out[2 * h - 1] = 0;
  karatsuba(a + h, b + h, hi, out + 2 * h, p, scratch);
  sa = scratch.data() + base;
  sb = sa + hi;
  mid = sb + hi;
  tmp = mid + (2 * hi - 1);
  karatsuba(sa, sb, hi, mid, p, scratch);
  sa = scratch.data() + base;
  sb = sa + hi;
  mid = sb + hi;
  tmp = mid + (2 * hi - 1);
  (void)tmp;
  // mid -= low + high
  for (std::size_t i = 0; i < 2 * h - 1; ++i) {
    Word v = mid[i] + p - out[i];
    mid[i] = v >= p ? v - p : v;
  }
  for (std::size_t i = 0; i < 2 * hi - 1; ++i) {
    Word v = mid[i] + p - out[2 * h + i];
    mid[i] = v >= p ? v - p : v;
  }
  for (std::size_t i = 0; i < 2 * hi - 1; ++i) {
    Word v = out[h + i] + mid[i];
    out[h + i] = v >= p ? v - p : v;
  }
  scratch.resize(base);
}

}  // namespace

template <>
std::vector<ModPrime> mul_truncated(const std::vector<ModPrime>& a, const std::vector<ModPrime>& b, std::size_t n,
                                    const ModPrime& zero) {
  const Word p = zero.modulus();
  for (const auto& x : a) (void)(x + zero);  // modulus check
  for (const auto& x : b) (void)(x + zero);
  std::size_t la = std::min(a.size(), n), lb = std::min(b.size(), n);
  std::vector<Word> out(n, 0);
  if (la == 0 || lb == 0) return std::vector<ModPrime>(n, zero);

  if (std::min(la, lb) <= 2 * kKaratsubaCutoff) {
    // Schoolbook with lazy reduction: for p < 2^31 two reduced products sum below 2^63.
    for (std::size_t i = 0; i < la; ++i) {
      Word ai = a[i].value();
      if (ai == 0) continue;
      std::size_t jmax = std::min(lb, n - i);
      for (std::size_t j = 0; j < jmax; ++j) {
        Word s = out[i + j] + ai * b[j].value() % p;
        out[i + j] = s >= p ? s - p : s;
      }
    }
  } else {
    std::size_t m = std::max(la, lb);
    std::vector<Word> wa(m, 0), wb(m, 0), full(2 * m - 1, 0), scratch;
    for (std::size_t i = 0; i < la; ++i) wa[i] = a[i].value();
    for (std::size_t i = 0; i < lb; ++i) wb[i] = b[i].value();
    scratch.reserve(8 * m);
    karatsuba(wa.data(), wb.data(), m, full.data(), p, scratch);
    for (std::size_t i = 0; i < n && i < full.size(); ++i) out[i] = full[i];
  }
  std::vector<ModPrime> result;
  result.reserve(n);
  for (Word v : out) result.emplace_back(static_cast<long long>(v), zero.modulus());
  return result;
}

}  // namespace bpe::detail
