#pragma once

#include <string>
#include <vector>

#include "bpe/arith/ring.hpp"

namespace bpe {

// Positive definite form a x^2 + b xy + c y^2 of discriminant b^2 - 4ac = -d.
// omega is the Hurwitz weight: 3 for multiples of x^2+xy+y^2, 2 for multiples
// of x^2+y^2, else 1.
struct QuadForm {
  long long a, b, c;
  int omega;

  long long discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

std::string to_string(const QuadForm& q);

// Throws InputError unless d > 0 and -d = 0, 1 (mod 4).
void require_discriminant(long long d);

// One reduced form per SL2(Z) class of discriminant -d, imprimitive classes
// included, ordered by (a, b).
std::vector<QuadForm> reduced_forms(long long d);

// sum 1/omega over reduced_forms(d).
Rational hurwitz_class_number(long long d);

}  // namespace bpe
