#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/arith/ring.hpp"

namespace bpe {

// a + b*sqrt(D) over a base ring T (Rational for Q(sqrt D), ModPrime for
// F_ell[sqrt D]). D is a positive non-square integer. Over F_ell the pair (a, b)
// is kept symbolically even when D is a residue; see reduce_to_prime_field().
template <class T>
class QuadExt {
 public:
  QuadExt(T a, T b, std::int64_t D) : a_(std::move(a)), b_(std::move(b)), D_(D) {
    if (D < 2) throw DomainError("quadratic extension needs D >= 2");
    if constexpr (std::is_same_v<T, Rational>) {
      a_.canonicalize();
      b_.canonicalize();
    }
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  std::int64_t D() const { return D_; }

  bool is_rational() const { return is_zero(b_); }

  // a^2 - D b^2
  T norm() const { return T(a_ * a_ - from_integer(a_, static_cast<long long>(D_)) * b_ * b_); }

  QuadExt conjugate() const { return QuadExt(a_, T(-b_), D_); }

  QuadExt inverse() const {
    T n = norm();
    if (is_zero(n)) throw DomainError("element of norm zero is not invertible");
    T ninv = bpe::inverse(n);
    return QuadExt(T(a_ * ninv), T(-b_ * ninv), D_);
  }

  QuadExt operator-() const { return QuadExt(T(-a_), T(-b_), D_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    return QuadExt(T(x.a_ + y.a_), T(x.b_ + y.b_), x.D_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    return QuadExt(T(x.a_ - y.a_), T(x.b_ - y.b_), x.D_);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    T d = from_integer(x.a_, static_cast<long long>(x.D_));
    return QuadExt(T(x.a_ * y.a_ + d * x.b_ * y.b_), T(x.a_ * y.b_ + x.b_ * y.a_), x.D_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  // Image under sqrt(D) -> s, where s is a square root of D in F_ell.
  ModPrime reduce_to_prime_field(const ModPrime& sqrtD) const
    requires std::is_same_v<T, ModPrime>
  {
    if (sqrtD * sqrtD != from_integer(sqrtD, static_cast<long long>(D_)))
      throw DomainError("given value is not a square root of D");
    return a_ + b_ * sqrtD;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << "(" << x.a_ << "+" << x.b_ << "*sqrt(" << x.D_ << "))";
  }

 private:
  void check_same(const QuadExt& y) const {
    if (D_ != y.D_)
      throw DomainError("mixed quadratic fields sqrt(" + std::to_string(D_) + ") and sqrt(" + std::to_string(y.D_) + ")");
  }

  T a_;
  T b_;
  std::int64_t D_;
};

template <class T>
QuadExt<T> zero_like(const QuadExt<T>& x) {
  return QuadExt<T>(zero_like(x.a()), zero_like(x.a()), x.D());
}
template <class T>
QuadExt<T> one_like(const QuadExt<T>& x) {
  return QuadExt<T>(one_like(x.a()), zero_like(x.a()), x.D());
}
template <class T>
QuadExt<T> from_integer(const QuadExt<T>& x, long long n) {
  return QuadExt<T>(from_integer(x.a(), n), zero_like(x.a()), x.D());
}
template <class T>
QuadExt<T> from_integer(const QuadExt<T>& x, const Integer& n) {
  return QuadExt<T>(from_integer(x.a(), n), zero_like(x.a()), x.D());
}
template <class T>
QuadExt<T> from_rational(const QuadExt<T>& x, const Rational& r) {
  return QuadExt<T>(from_rational(x.a(), r), zero_like(x.a()), x.D());
}
template <class T>
bool is_zero(const QuadExt<T>& x) {
  return is_zero(x.a()) && is_zero(x.b());
}
template <class T>
QuadExt<T> inverse(const QuadExt<T>& x) {
  return x.inverse();
}
template <class T>
std::string to_string(const QuadExt<T>& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

using QuadRational = QuadExt<Rational>;
using QuadMod = QuadExt<ModPrime>;

}  // namespace bpe
