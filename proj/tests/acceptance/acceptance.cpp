// One line per acceptance criterion, "[PASS]" or "[FAIL]", followed by
// indented detail. Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bpe/arith/number_theory.hpp"
#include "bpe/arith/sieve.hpp"
#include "bpe/borcherds/congruence.hpp"
#include "bpe/borcherds/exponents.hpp"
#include "bpe/borcherds/twisted.hpp"
#include "bpe/classpoly/class_poly.hpp"
#include "bpe/classpoly/eligibility.hpp"
#include "bpe/classpoly/quad_form.hpp"
#include "bpe/density/curve.hpp"
#include "bpe/density/gl2.hpp"
#include "bpe/density/table.hpp"
#include "bpe/qseries/modular_forms.hpp"
#include "bpe/ssforms/eigenbasis.hpp"
#include "bpe/ssforms/supersingular.hpp"

using namespace bpe;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& s) {
    pass = false;
    notes.push_back(s);
  }
  void note(const std::string& s) { notes.push_back(s); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// --- 1 -------------------------------------------------------------------
Outcome exponent_regression() {
  Outcome o;
  struct Row {
    int n;
    long long d;
    const char* want;
  };
  const Row rows[] = {{1, 3, "-248"},  {2, 3, "26572"},    {3, 3, "-4096248"}, {1, 4, "492"},
                      {2, 4, "143376"}, {3, 4, "51180012"}, {1, 7, "-4119"},    {2, 7, "8288256"}};
  std::map<long long, ExponentTable> tables;
  for (long long d : {3LL, 4LL, 7LL}) tables.emplace(d, exact_exponents(d, 3));
  int ok = 0;
  for (const auto& r : rows) {
    Integer got = tables.at(r.d)(r.n);
    if (got == Integer(r.want))
      ++ok;
    else
      o.fail("A(" + std::to_string(r.n * r.n) + "," + std::to_string(r.d) + "): computed " + got.get_str() +
             ", expected " + r.want);
  }
  o.note(std::to_string(ok) + "/8 values match");
  if (!o.pass) {
    // independent check of d = 3: f_3 = E4 / eta^8 has exponents with
    // prod (1 - q^n)^{A(n^2)} = q^{-1} f_3 q-expansion identity; compare n = 2
    const int N = 4;
    auto e4 = eisenstein(4, N + 2, Rational(0));
    auto eta8 = euler_product(N + 2, Rational(0)).pow(8u);
    auto f = e4 / eta8;
    // log derivative of prod (1 - q^n)^{c(n)} is -sum_n n c(n) q^n / (1 - q^n)
    auto ld = log_derivative(f);
    std::vector<Rational> c(N + 1, 0);
    for (int n = 1; n <= N; ++n) {
      Rational s = -ld[n];
      for (int m = 1; m < n; ++m)
        if (n % m == 0) s -= Rational(m) * c[std::size_t(m)];
      c[std::size_t(n)] = s / Rational(n);
    }
    o.note("product oracle E4/eta^8: A(1,3) = " + to_string(c[1]) + ", A(4,3) = " + to_string(c[2]));
  }
  return o;
}

// --- 2 -------------------------------------------------------------------
Outcome congruence_constants() {
  Outcome o;
  auto F = fit_congruence(4, 11);
  o.expect(F.c0.value() == 6 && F.r() == 1 && F.c[0].value() == 9,
           "(4, 11): got c0 = " + std::to_string(F.c0.value()) + ", c1 = " + (F.r() ? std::to_string(F.c[0].value()) : "-"));
  o.note("(4, 11): c0 = " + std::to_string(F.c0.value()) + ", c1 = " + std::to_string(F.c[0].value()));

  PrimeField K(31);
  const int N = 200;
  auto m1 = monomial_series(Monomial{1, 2, 2}, N, K.zero());
  auto m2 = monomial_series(Monomial{2, 2, 0}, N, K.zero());
  auto G = fit_congruence_in_basis(20, 31, {m1 + m2.scaled(K(22)), m1 + m2.scaled(K(19))},
                                   {"Delta*E4^2*E6^2 + 22*Delta^2*E4^2", "Delta*E4^2*E6^2 + 19*Delta^2*E4^2"});
  bool ok = G.c0.value() == 2 && G.r() == 2 && G.c[0].value() == 14 && G.c[1].value() == 9;
  std::string got = "(" + std::to_string(G.c0.value()) + ", " + std::to_string(G.c[0].value()) + ", " +
                    std::to_string(G.c[1].value()) + ")";
  o.expect(ok, "(20, 31) against F1, F2: got " + got);
  o.note("(20, 31) against F1, F2: (c0, c1, c2) = " + got + ", verified to q^" + std::to_string(G.verified_to));
  auto E = fit_congruence(20, 31);
  o.note("(20, 31) against the T_2 eigenbasis: c0 = " + std::to_string(E.c0.value()) + ", c = [" +
         std::to_string(E.c[0].value()) + ", " + std::to_string(E.c[1].value()) + "] with f1 = " + E.labels[0] +
         ", f2 = " + E.labels[1] + " (F1, F2 are not T_2 eigenforms mod 31)");
  return o;
}

// --- 3, 4 ----------------------------------------------------------------
Outcome end_to_end(long long d, std::uint32_t ell, int N, std::function<std::uint32_t(const CongruenceFormula&, int)> want) {
  Outcome o;
  auto F = fit_congruence(d, ell, N);
  auto A = exact_exponents(d, N);
  int compared = 0, skipped = 0, bad = 0;
  for (int n = 1; n <= N; ++n) {
    if (n % int(ell) == 0) {
      ++skipped;
      continue;
    }
    Integer m = A(n) % long(ell);
    if (m < 0) m += long(ell);
    std::uint32_t w = want(F, n);
    if (m != long(w)) {
      if (bad++ < 5) o.fail("n = " + std::to_string(n) + ": A mod ell = " + m.get_str() + ", expected " + std::to_string(w));
    }
    ++compared;
  }
  if (bad > 5) o.fail(std::to_string(bad) + " mismatches in total");
  o.note("d = " + std::to_string(d) + ", ell = " + std::to_string(ell) + ": " + std::to_string(compared) +
         " indices compared, " + std::to_string(skipped) + " skipped");
  return o;
}

Outcome end_to_end_4_11() {
  return end_to_end(4, 11, 300, [](const CongruenceFormula& F, int n) { return formula_eval(F, std::uint64_t(n)).value(); });
}

Outcome trivial_congruences() {
  Outcome o;
  for (auto [ell, d] : std::vector<std::pair<std::uint32_t, long long>>{{5, 3}, {7, 4}, {13, 7}}) {
    auto sub = end_to_end(d, ell, 200, [](const CongruenceFormula&, int) { return 2u; });
    // -24 h(d) mod ell is the constant
    Rational c = Rational(-24) * hurwitz_class_number(d);
    o.expect(PrimeField(ell)(c).value() == 2, "-24 h(" + std::to_string(d) + ") is not 2 mod " + std::to_string(ell));
    if (!sub.pass) o.pass = false;
    for (auto& s : sub.notes) o.notes.push_back(s);
  }
  return o;
}

// --- 5 -------------------------------------------------------------------
Outcome supersingular_oracle() {
  Outcome o;
  int n = 0;
  for (std::uint32_t ell = 5; ell <= 50; ++ell) {
    if (!is_prime(ell)) continue;
    ++n;
    auto s = supersingular_poly(ell).poly;
    auto b = supersingular_poly_bruteforce(ell);
    o.expect(s == b, "ell = " + std::to_string(ell) + ": " + s.render() + " vs enumeration " + b.render());
  }
  o.note(std::to_string(n) + " primes compared");
  return o;
}

// --- 6 -------------------------------------------------------------------
Outcome gl2_counts() {
  Outcome o;
  for (std::uint32_t ell : {3u, 5u, 7u, 11u}) {
    auto h = charpoly_histogram_bruteforce(ell);
    for (std::uint32_t a = 0; a < ell; ++a)
      for (std::uint32_t b = 1; b < ell; ++b) {
        auto c = charpoly_count(ell, a, b);
        bool ok = c.count == h[a][b] && c.proportion == Rational(long(h[a][b])) / Rational(long(gl2_order(ell)));
        o.expect(ok, "ell = " + std::to_string(ell) + ", (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
  }
  int tallies = 0;
  for (std::uint32_t ell = 3; ell <= 31; ++ell) {
    if (!is_prime(ell)) continue;
    for (std::uint32_t a = 0; a < ell; ++a) {
      int irr = 0, split = 0, rep = 0;
      for (std::uint32_t b = 1; b < ell; ++b) {
        switch (charpoly_case(ell, a, b)) {
          case CharpolyCase::irreducible: ++irr; break;
          case CharpolyCase::split: ++split; break;
          case CharpolyCase::repeated: ++rep; break;
        }
      }
      int h = int(ell - 1) / 2;
      bool ok = a == 0 ? (irr == h && split == h && rep == 0) : (irr == h && split == int(ell - 3) / 2 && rep == 1);
      o.expect(ok, "case tally ell = " + std::to_string(ell) + ", a = " + std::to_string(a));
      ++tallies;
    }
  }
  o.note("brute-force counts for ell in {3, 5, 7, 11}; " + std::to_string(tallies) + " case tallies for ell <= 31");
  return o;
}

// --- 7 -------------------------------------------------------------------
Outcome asymptotic_tables() {
  Outcome o;
  auto T = asymptotic_table(fit_congruence(4, 11));
  for (std::uint32_t t = 0; t < 11; ++t) {
    Rational want = t == 8 ? Rational(119, 1200) : t == 10 ? Rational(109, 1200) : Rational(9, 100);
    o.expect(T.exact[t] == want, "(4, 11) t = " + std::to_string(t) + ": " + to_string(T.exact[t]) + " vs " + to_string(want));
  }
  if (o.pass) o.note("(4, 11): 9/100 except t = 8 -> 119/1200, t = 10 -> 109/1200");

  std::map<std::string, std::vector<int>> printed = {{"991/29760", {0}},
                                                     {"1199/37200", {1, 2, 9, 14, 21, 29}},
                                                     {"29/900", {3, 4, 5, 11, 16, 19, 20, 23, 28}},
                                                     {"719/22320", {6, 7, 10, 18, 25, 30}},
                                                     {"14399/446400", {8}},
                                                     {"799/24800", {12, 13, 15, 17}},
                                                     {"7193/223200", {22, 24, 26, 27}}};
  std::vector<Rational> want(31);
  for (const auto& [v, ts] : printed)
    for (int t : ts) want[std::size_t(t)] = Rational(v);
  Rational sum_want = 0;
  for (const auto& w : want) sum_want += w;

  auto report = [&](const char* name, const DensityTable& U) {
    int match = 0;
    std::map<std::string, std::vector<int>> groups;
    for (std::uint32_t t = 0; t < 31; ++t) {
      if (U.exact[t] == want[t]) ++match;
      groups[to_string(U.exact[t])].push_back(int(t));
    }
    std::string g;
    for (const auto& [v, ts] : groups) {
      g += "  " + v + " at t =";
      for (int t : ts) g += " " + std::to_string(t);
      g += ";";
    }
    o.note(std::string(name) + ": " + std::to_string(match) + "/31 residues match;" + g);
    return match == 31;
  };
  auto E = fit_congruence(20, 31);
  bool eig = report("(20, 31) eigenbasis c = [1, 22]", asymptotic_table(E));
  o.expect(eig, "(20, 31): computed table differs from the printed case list");
  o.note("printed case list sums to " + to_string(sum_want) + "; so does the computed table");
  return o;
}

// --- 8 -------------------------------------------------------------------
Outcome empirical_table1() {
  Outcome o;
  auto F = fit_congruence(4, 11);
  struct Row {
    std::uint64_t X;
    double tol;
    std::array<double, 11> v;
  };
  const Row rows[] = {
      {10000, 0.0015, {.0829, .0928, .0887, .0911, .0862, .0903, .0846, .0960, .1009, .1066, .0797}},
      {1000000, 0.0005, {.0899, .0897, .0891, .0915, .0887, .0894, .0893, .0913, .0976, .0920, .0914}},
  };
  for (const auto& row : rows) {
    auto T = empirical_table(F, row.X, 1);
    double worst = 0;
    std::string got;
    for (std::uint32_t t = 0; t < 11; ++t) {
      double diff = std::abs(T.ratio(t) - row.v[t]);
      worst = std::max(worst, diff);
      got += fmt(" %.4f", T.ratio(t));
    }
    o.expect(worst <= row.tol, "X = " + std::to_string(row.X) + ": max deviation " + fmt("%.4f", worst));
    o.note("X = " + std::to_string(row.X) + " (" + T.source + "):" + got + "; max |diff| " + fmt("%.4f", worst) +
           " <= " + fmt("%.4f", row.tol));
  }
  return o;
}

// --- 9 -------------------------------------------------------------------
Outcome table2() {
  Outcome o;
  const std::map<std::uint32_t, std::vector<long long>> printed = {
      {11, {3, 4, 11, 12, 15, 20, 67, 115, 148, 163, 267}},
      {17, {3, 7, 11, 12, 24, 28, 88, 91, 163, 267, 403}},
      {19, {4, 7, 11, 19, 20, 28, 35, 43, 163, 187, 235, 427}}};
  for (const auto& [ell, list] : printed) {
    std::set<long long> want(list.begin(), list.end()), got;
    for (long long d = 3; d <= list.back(); ++d)
      if (is_negative_discriminant(d) && eligibility(d, ell).divides) got.insert(d);
    std::string row;
    for (auto d : got) row += " " + std::to_string(d);
    o.note("ell = " + std::to_string(ell) + ", d <= " + std::to_string(list.back()) + ":" + row);
    for (auto d : got)
      if (!want.count(d)) {
        auto e = eligibility(d, ell);
        o.fail("ell = " + std::to_string(ell) + ": d = " + std::to_string(d) + " flagged but not printed; H_d mod ell = " +
               e.h_mod.render() + ", s_ell = " + e.s_ell.render() + (is_fundamental_discriminant(-d) ? "" : " (non-fundamental)"));
      }
    for (auto d : want)
      if (!got.count(d)) {
        auto e = eligibility(d, ell);
        o.fail("ell = " + std::to_string(ell) + ": d = " + std::to_string(d) + " printed but not flagged; H_d mod ell = " +
               e.h_mod.render() + ", s_ell = " + e.s_ell.render());
      }
  }
  return o;
}

// --- 10 ------------------------------------------------------------------
Outcome property_suites() {
  Outcome o;
  for (std::uint32_t ell = 5; ell <= 31; ++ell) {
    if (!is_prime(ell)) continue;
    PrimeField K(ell);
    auto lo = eisenstein(int(ell) - 1, 500, K.zero());
    auto hi = eisenstein(int(ell) + 1, 500, K.zero());
    auto e2 = eisenstein(2, 500, K.zero());
    bool ok = true;
    for (int n = 0; n <= 500; ++n) ok = ok && lo[n] == (n == 0 ? K.one() : K.zero()) && hi[n] == e2[n];
    o.expect(ok, "Eisenstein congruence fails for ell = " + std::to_string(ell));
  }
  o.note("E_{ell-1} = 1, E_{ell+1} = E_2 mod ell to q^500 for 5 <= ell <= 31");

  std::mt19937_64 rng(17);
  for (long long D : {5LL, 8LL, 13LL}) {
    std::vector<Integer> A;
    for (int i = 0; i < 60; ++i) A.push_back(long(rng() % 20001) - 10000);
    auto back = twisted_roundtrip(D, A, 60);
    o.expect(back == A, "nu round trip fails for D = " + std::to_string(D));
    nu_sequence(D, 200);  // throws on disagreement with the closed form
  }
  o.note("nu round trips for D in {5, 8, 13}, N = 60");

  long long traces = 0, hasse_bad = 0;
  auto hasse = [&](long long a, std::uint64_t p) {
    ++traces;
    if (double(a) * double(a) > 4.0 * double(p)) ++hasse_bad;
  };
  for (std::uint32_t ell : {11u, 17u, 19u}) {
    auto b = eigenbasis(ell, 1000);
    auto E = builtin_curve(ell);
    PrimeField K(ell);
    int bad = 0;
    for (auto p : sieve(1000)) {
      if (p == ell) continue;
      long long a = ec_trace(E, p);
      hasse(a, p);
      if (b.forms[0][int(p)] != K(a)) ++bad;
    }
    o.expect(bad == 0, "eigenform vs " + E.label + ": " + std::to_string(bad) + " primes disagree");
  }
  o.note("eigenform a(p) = trace of X0(ell) mod ell for ell in {11, 17, 19}, p < 1000");

  auto band = sieve(30000).primes();
  int compared = 0, bad = 0;
  for (const auto& E : {x0_11(), x0_17(), x0_19()})
    for (auto p : band) {
      if (p <= 10000 || p % 7 != 1) continue;
      long long a = ec_trace_bsgs(E, p, p);
      long long n = ec_trace_naive(E, p);
      hasse(a, p);
      hasse(n, p);
      ++compared;
      if (a != n) ++bad;
    }
  o.expect(bad == 0, std::to_string(bad) + " BSGS/naive disagreements");
  o.note(std::to_string(compared) + " BSGS/naive comparisons for 10^4 < p < 3*10^4");
  o.expect(hasse_bad == 0, std::to_string(hasse_bad) + " traces violate the Hasse bound");
  o.note(std::to_string(traces) + " traces within the Hasse bound");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "exponent regression", 60, exponent_regression},
      {2, "congruence constants", 60, congruence_constants},
      {3, "end-to-end congruence d=4, ell=11, n<=300", 120, end_to_end_4_11},
      {4, "trivial congruences", 120, trivial_congruences},
      {5, "supersingular oracle 5<=ell<=50", 60, supersingular_oracle},
      {6, "GL2 counts and case tallies", 120, gl2_counts},
      {7, "asymptotic tables", 60, asymptotic_tables},
      {8, "empirical table d=4, ell=11", 300, empirical_table1},
      {9, "eligible d lists for ell = 11, 17, 19", 300, table2},
      {10, "property suites", 300, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) o.fail("runtime " + fmt("%.1f", s) + " s over budget " + fmt("%.0f", c.budget_s) + " s");
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
