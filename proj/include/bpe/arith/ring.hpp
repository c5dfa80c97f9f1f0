#pragma once

// Exact integers and rationals, plus the small set of free functions that
// generic series/polynomial code uses to talk about a coefficient ring:
//
//   zero_like(x), one_like(x)     additive / multiplicative identity of x's ring
//   from_integer(proto, n)        image of an integer in proto's ring
//   from_rational(proto, r)       image of a rational (throws if undefined)
//   is_zero(x), inverse(x)
//
// Every ring type (ModPrime, QuadExt<T>) provides the same overload set so that
// QSeries<T> and Poly<T> never need a global "current ring".

#include <cstdint>
#include <gmpxx.h>
#include <string>

#include "bpe/error.hpp"

namespace bpe {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" for non-integers, "num" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text);

inline Integer zero_like(const Integer&) { return 0; }
inline Integer one_like(const Integer&) { return 1; }
inline Integer from_integer(const Integer&, const Integer& n) { return n; }
inline Integer from_integer(const Integer&, long long n) { return Integer(static_cast<long>(n)); }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline Integer from_rational(const Integer&, const Rational& r) {
  if (r.get_den() != 1) throw DomainError("rational " + to_string(r) + " is not an integer");
  return r.get_num();
}

inline Integer inverse(const Integer& x) {
  if (x == 1 || x == -1) return x;
  throw DomainError("integer " + x.get_str() + " is not a unit");
}

inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline Rational from_integer(const Rational&, const Integer& n) { return Rational(n); }
inline Rational from_integer(const Rational&, long long n) { return Rational(static_cast<long>(n)); }
inline Rational from_rational(const Rational&, const Rational& r) { return r; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw DomainError("division by zero rational");
  return Rational(1) / x;
}

// Square-and-multiply in any ring with one_like().
template <class T>
T power(const T& base, std::uint64_t e) {
  T result = one_like(base);
  T b = base;
  while (e != 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

}  // namespace bpe
