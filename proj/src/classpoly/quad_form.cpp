#include "bpe/classpoly/quad_form.hpp"

#include "bpe/error.hpp"

namespace bpe {

bool QuadForm::is_reduced() const {
  long long ab = b < 0 ? -b : b;
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

std::string to_string(const QuadForm& q) {
  return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + ")";
}

void require_discriminant(long long d) {
  if (d <= 0 || (d % 4 != 0 && d % 4 != 3))
    throw InputError("d = " + std::to_string(d) + ": -d is not a discriminant (need d > 0, -d = 0 or 1 mod 4)");
}

std::vector<QuadForm> reduced_forms(long long d) {
  require_discriminant(d);
  std::vector<QuadForm> out;
  // reduced forms satisfy 3a^2 <= d
  for (long long a = 1; 3 * a * a <= d; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      if (((b % 2) + 2) % 2 != d % 2) continue;
      long long num = b * b + d;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      QuadForm q{a, b, c, 1};
      if (!q.is_reduced()) continue;
      if (a == b && b == c)
        q.omega = 3;
      else if (b == 0 && a == c)
        q.omega = 2;
      out.push_back(q);
    }
  }
  return out;
}

Rational hurwitz_class_number(long long d) {
  Rational h = 0;
  for (const auto& q : reduced_forms(d)) h += Rational(1, q.omega);
  h.canonicalize();
  return h;
}

}  // namespace bpe
