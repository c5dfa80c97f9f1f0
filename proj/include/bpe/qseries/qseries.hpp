#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/arith/ring.hpp"
#include "bpe/error.hpp"

namespace bpe {

namespace detail {

// First n coefficients of the product of two dense coefficient lists.
template <class T>
std::vector<T> mul_truncated(const std::vector<T>& a, const std::vector<T>& b, std::size_t n, const T& zero) {
  std::vector<T> out(n, zero);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (is_zero(a[i])) continue;
    std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

// Integer and rational coefficients go through GMP's fused multiply-add.
template <>
std::vector<Integer> mul_truncated(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n,
                                   const Integer& zero);

// F_ell coefficients: lazy reduction plus Karatsuba for long inputs.
template <>
std::vector<ModPrime> mul_truncated(const std::vector<ModPrime>& a, const std::vector<ModPrime>& b, std::size_t n,
                                    const ModPrime& zero);

}  // namespace detail

// Truncated Laurent series sum_{e = lead}^{order} c_e q^e with exact
// coefficients in T. Coefficients past `order` are unknown, not zero.
template <class T>
class QSeries {
 public:
  // coeffs[i] is the coefficient of q^(lead + i); size must be order - lead + 1.
  QSeries(int lead, int order, std::vector<T> coeffs, T zero)
      : lead_(lead), order_(order), coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    if (order < lead - 1 || coeffs_.size() != static_cast<std::size_t>(order - lead + 1))
      throw InputError("QSeries: coefficient count does not match [lead, order]");
  }

  static QSeries zero(const T& proto, int lead, int order) {
    return QSeries(lead, order, std::vector<T>(std::max(0, order - lead + 1), zero_like(proto)), zero_like(proto));
  }

  static QSeries constant(const T& c, int order) {
    QSeries s = zero(c, 0, order);
    if (order >= 0) s.coeffs_[0] = c;
    return s;
  }

  // Known coefficients only: zero-extended below lead, error above order.
  static QSeries from_coefficients(int lead, std::vector<T> coeffs, const T& proto) {
    int order = lead + static_cast<int>(coeffs.size()) - 1;
    return QSeries(lead, order, std::move(coeffs), zero_like(proto));
  }

  int lead() const { return lead_; }
  int order() const { return order_; }
  const T& zero_value() const { return zero_; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  const T& operator[](int e) const {
    if (e > order_)
      throw TruncationError("coefficient of q^" + std::to_string(e) + " requested but series is known only to q^" +
                            std::to_string(order_));
    if (e < lead_) return zero_;
    return coeffs_[static_cast<std::size_t>(e - lead_)];
  }

  // Exponent of the first nonzero coefficient, or order + 1 if none is known.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero(coeffs_[i])) return lead_ + static_cast<int>(i);
    return order_ + 1;
  }

  QSeries truncated(int order) const {
    if (order > order_) throw TruncationError("cannot extend a series past its known order");
    int new_order = std::max(order, lead_ - 1);
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + (new_order - lead_ + 1));
    return QSeries(lead_, new_order, std::move(c), zero_);
  }

  // Drop leading zeros so that lead == valuation (when anything is nonzero).
  QSeries normalized() const {
    int v = valuation();
    if (v > order_ || v == lead_) return *this;
    std::vector<T> c(coeffs_.begin() + (v - lead_), coeffs_.end());
    return QSeries(v, order_, std::move(c), zero_);
  }

  // q^k * f
  QSeries shifted(int k) const { return QSeries(lead_ + k, order_ + k, coeffs_, zero_); }

  // q d/dq
  QSeries theta() const {
    std::vector<T> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] * from_integer(zero_, static_cast<long long>(lead_ + int(i)));
    return QSeries(lead_, order_, std::move(c), zero_);
  }

  QSeries scaled(const T& s) const {
    std::vector<T> c = coeffs_;
    for (auto& x : c) x = x * s;
    return QSeries(lead_, order_, std::move(c), zero_);
  }

  template <class F>
  auto map(F&& f) const -> QSeries<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    U z = f(zero_);
    return QSeries<U>(lead_, order_, std::move(c), z);
  }

  QSeries operator-() const { return scaled(from_integer(zero_, -1LL)); }

  friend QSeries operator+(const QSeries& x, const QSeries& y) { return x.combine(y, false); }
  friend QSeries operator-(const QSeries& x, const QSeries& y) { return x.combine(y, true); }

  friend QSeries operator*(const QSeries& x, const QSeries& y) {
    int vx = x.valuation(), vy = y.valuation();
    int order = std::min(x.order_ + vy, y.order_ + vx);
    if (vx > x.order_ || vy > y.order_) {
      // One factor is zero as far as it is known.
      return zero(x.zero_, order + 1, order);
    }
    int lead = vx + vy;
    std::size_t n = static_cast<std::size_t>(order - lead + 1);
    std::vector<T> a(x.coeffs_.begin() + (vx - x.lead_), x.coeffs_.end());
    std::vector<T> b(y.coeffs_.begin() + (vy - y.lead_), y.coeffs_.end());
    return QSeries(lead, order, detail::mul_truncated(a, b, n, x.zero_), x.zero_);
  }

  // x / y. The leading coefficient of y (at its valuation) must be a unit.
  friend QSeries operator/(const QSeries& x, const QSeries& y) {
    int vy = y.valuation();
    if (vy > y.order_) throw DomainError("division by a series that is zero to its known order");
    T cinv = inverse(y[vy]);
    int vx = std::min(x.valuation(), x.order_ + 1);
    int rel = std::min(x.order_ - vx, y.order_ - vy);
    int lead = vx - vy;
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(std::max(rel + 1, 0)));
    for (int n = 0; n <= rel; ++n) {
      T acc = x[vx + n];
      for (int k = 1; k <= n; ++k) {
        const T& yk = y[vy + k];
        if (!is_zero(yk)) acc = acc - yk * out[static_cast<std::size_t>(n - k)];
      }
      out.push_back(acc * cinv);
    }
    return QSeries(lead, lead + rel, std::move(out), x.zero_);
  }

  QSeries pow(unsigned e) const {
    if (e == 0) return constant(one_like(zero_), std::max(order_ - lead_, 0));
    std::optional<QSeries> result;
    QSeries base = *this;
    for (;;) {
      if (e & 1U) result = result ? *result * base : base;
      e >>= 1U;
      if (e == 0) break;
      base = base * base;
    }
    return *result;
  }

  // True if all coefficients through q^upto agree (both must be known there).
  bool agrees_with(const QSeries& y, int upto) const {
    int from = std::min(lead_, y.lead_);
    for (int e = from; e <= upto; ++e)
      if ((*this)[e] != y[e]) return false;
    return true;
  }

  // Canonical text form "c*q^e + ... + O(q^(order+1))".
  std::string render() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (is_zero(coeffs_[i])) continue;
      int e = lead_ + static_cast<int>(i);
      if (!first) os << " + ";
      first = false;
      std::ostringstream c;
      c << coeffs_[i];
      std::string cs = c.str();
      if (e == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    if (!first) os << " + ";
    os << "O(q^" << (order_ + 1) << ")";
    return os.str();
  }

 private:
  QSeries combine(const QSeries& y, bool subtract) const {
    int lead = std::min(lead_, y.lead_);
    int order = std::min(order_, y.order_);
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(std::max(order - lead + 1, 0)));
    for (int e = lead; e <= order; ++e) c.push_back(subtract ? T((*this)[e] - y[e]) : T((*this)[e] + y[e]));
    return QSeries(lead, order, std::move(c), zero_);
  }

  int lead_;
  int order_;
  std::vector<T> coeffs_;
  T zero_;
};

// theta(f) / f for f with unit leading coefficient.
template <class T>
QSeries<T> log_derivative(const QSeries<T>& f) {
  return f.theta() / f;
}

// Coefficient-wise reduction of an exact series into F_ell.
template <class T>
QSeries<ModPrime> reduce_mod(const QSeries<T>& f, const ModPrime& proto) {
  return f.map([&](const T& x) { return from_rational(proto, Rational(x)); });
}

}  // namespace bpe
