#include "bpe/qseries/modular_forms.hpp"

namespace bpe {

std::vector<Monomial> monomial_basis(int k, bool cusp_only) {
  if (k < 0 || k % 2 != 0) throw InputError("monomial_basis: weight must be even and >= 0, got " + std::to_string(k));
  std::vector<Monomial> out;
  for (int a = k / 12; a >= (cusp_only ? 1 : 0); --a) {
    int rest = k - 12 * a;
    // 4b covers every even residue mod 6 as b runs over {0, 1, 2}
    for (int b = 0; b <= 2; ++b) {
      int r6 = rest - 4 * b;
      if (r6 >= 0 && r6 % 6 == 0) {
        out.push_back({a, b, r6 / 6});
        break;
      }
    }
  }
  return out;
}

int cusp_dimension(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k == 2) return 0;
  int d = k / 12;
  if (k % 12 == 2) d -= 1;
  return std::max(d, 0);
}

std::string to_string(const Monomial& m) {
  std::string s;
  auto part = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part("Delta", m.a);
  part("E4", m.b);
  part("E6", m.c);
  return s.empty() ? "1" : s;
}

}  // namespace bpe
