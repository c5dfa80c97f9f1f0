#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "bpe/arith/ring.hpp"

namespace bpe {

// Owning wrapper around mpfr_t. Every value carries its own precision; binary
// operations produce the larger of the two.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(double v, mpfr_prec_t bits);
  BigFloat(const Integer& v, mpfr_prec_t bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  static BigFloat pi(mpfr_prec_t bits);
  BigFloat sqrt() const;
  BigFloat exp() const;
  BigFloat abs() const;
  BigFloat log10() const;
  // sin and cos of this value, at its precision.
  void sin_cos(BigFloat& s, BigFloat& c) const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Nearest integer.
  Integer round() const;
  // Decimal string with `digits` significant digits.
  std::string to_string(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  // |z| as an upper bound: |re| + |im|.
  BigFloat norm1() const { return re.abs() + im.abs(); }
};

// Decimal digits to MPFR bits, with a little slack.
mpfr_prec_t digits_to_bits(long digits);

}  // namespace bpe
