#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bpe/arith/ring.hpp"
#include "bpe/error.hpp"

namespace bpe {

namespace detail {
// Unqualified call so that ring overloads are found by ADL at instantiation.
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class T>
class Poly {
 public:
  Poly(std::vector<T> coeffs, T zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }

  static Poly zero(const T& proto) { return Poly({}, zero_like(proto)); }
  static Poly constant(const T& c) { return Poly({c}, zero_like(c)); }
  static Poly x(const T& proto) { return Poly({zero_like(proto), one_like(proto)}, zero_like(proto)); }
  // x - r
  static Poly linear(const T& r) { return Poly({T(-r), one_like(r)}, zero_like(r)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  const T& zero_value() const { return zero_; }

  const T& operator[](int i) const {
    if (i < 0 || i > degree()) return zero_;
    return c_[static_cast<std::size_t>(i)];
  }

  const T& leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && c_.back() == one_like(zero_); }

  Poly monic() const {
    if (c_.empty()) return *this;
    return scaled(inverse(c_.back()));
  }

  Poly scaled(const T& s) const {
    std::vector<T> c = c_;
    for (auto& x : c) x = x * s;
    return Poly(std::move(c), zero_);
  }

  Poly derivative() const {
    std::vector<T> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * from_integer(zero_, static_cast<long long>(i)));
    return Poly(std::move(c), zero_);
  }

  template <class V>
  V evaluate(const V& x, const V& zero_v) const {
    V acc = zero_v;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

  T evaluate(const T& x) const {
    T acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  template <class F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> c;
    for (const auto& x : c_) c.push_back(f(x));
    return Poly<U>(std::move(c), f(zero_));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(T(a[int(i)] + b[int(i)]));
    return Poly(std::move(c), a.zero_);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(T(a[int(i)] - b[int(i)]));
    return Poly(std::move(c), a.zero_);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return zero(a.zero_);
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c), a.zero_);
  }

  // (quotient, remainder); the divisor's leading coefficient must be a unit.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.c_.empty()) throw DomainError("polynomial division by zero");
    T lead_inv = inverse(b.c_.back());
    std::vector<T> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {zero(a.zero_), a};
    std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), a.zero_);
    for (int i = a.degree(); i >= db; --i) {
      T coef = r[std::size_t(i)] * lead_inv;
      q[std::size_t(i - db)] = coef;
      if (detail::coeff_is_zero(coef)) continue;
      for (int j = 0; j <= db; ++j) r[std::size_t(i - db + j)] = r[std::size_t(i - db + j)] - coef * b.c_[std::size_t(j)];
    }
    return {Poly(std::move(q), a.zero_), Poly(std::move(r), a.zero_)};
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // "x^2 + 3*x + 5"
  std::string render() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (detail::coeff_is_zero(c_[i])) continue;
      std::ostringstream cs;
      cs << c_[i];
      std::string s = cs.str();
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << s;
        continue;
      }
      if (s != "1") os << s << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
  T zero_;
};

// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// f | g
template <class T>
bool divides(const Poly<T>& f, const Poly<T>& g) {
  return divmod(g, f).second.is_zero();
}

// No repeated factor over the algebraic closure: gcd(f, f') = 1. A nonconstant f
// with f' = 0 (a p-th power in characteristic p) is not squarefree.
template <class T>
bool is_squarefree(const Poly<T>& f) {
  if (f.degree() <= 0) return true;
  Poly<T> df = f.derivative();
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

}  // namespace bpe
