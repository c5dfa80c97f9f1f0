#include "bpe/borcherds/exponents.hpp"

#include "bpe/arith/number_theory.hpp"
#include "bpe/classpoly/class_poly.hpp"
#include "bpe/classpoly/eligibility.hpp"
#include "bpe/classpoly/quad_form.hpp"
#include "bpe/error.hpp"
#include "bpe/qseries/modular_forms.hpp"
#include "json.hpp"

namespace bpe {

namespace {

// -theta(P(j)) / P(j) for monic P, over the ring of j's coefficients.
template <class T>
QSeries<T> component_log_derivative(const Poly<T>& P, const QSeries<T>& j, int N) {
  const auto& c = P.coefficients();
  auto acc = QSeries<T>::constant(c.back(), j.order());
  for (int k = P.degree() - 1; k >= 0; --k) acc = acc * j + QSeries<T>::constant(c[std::size_t(k)], j.order());
  auto L = -log_derivative(acc);
  if (L.order() < N) throw ConsistencyError("log derivative lost precision: order " + std::to_string(L.order()));
  return L.truncated(N);
}

int max_degree(const WeightedClassPoly& H) {
  int m = 0;
  for (const auto& comp : H.components) m = std::max(m, comp.poly.degree());
  return m;
}

}  // namespace

const Integer& ExponentTable::operator()(int n) const {
  if (n < 1 || n > N) throw TruncationError("A(n^2, d) requested for n = " + std::to_string(n) + " beyond table size");
  return values[std::size_t(n - 1)];
}

QSeries<Rational> log_derivative_exact(long long d, int N) {
  if (N < 0) throw InputError("series order must be >= 0");
  auto H = hilbert_class_poly(d);
  auto j = jfunction(N + max_degree(H) + 2, Integer(0));
  auto L = QSeries<Rational>::zero(Rational(0), 0, N);
  for (const auto& comp : H.components) {
    auto part = component_log_derivative(comp.poly, j, N);
    L = L + part.map([](const Integer& x) { return Rational(x); }).scaled(comp.weight);
  }
  return L;
}

ExponentTable exact_exponents(long long d, int N) {
  if (N < 1) throw InputError("exponent table needs N >= 1");
  auto L = log_derivative_exact(d, N);
  Rational h = hurwitz_class_number(d);
  if (L[0] != h)
    throw ConsistencyError("constant term " + to_string(L[0]) + " of the log derivative differs from h(" +
                           std::to_string(d) + ") = " + to_string(h));
  ExponentTable t{d, N, {}};
  t.values.reserve(std::size_t(N));
  for (int n = 1; n <= N; ++n) {
    Rational s = 0;
    for (auto m : divisors(std::uint64_t(n))) {
      int mu = moebius(std::uint64_t(n) / m);
      if (mu != 0) s += mu * L[int(m)];
    }
    s /= n;
    if (s.get_den() != 1)
      throw ConsistencyError("A(" + std::to_string(n) + "^2, " + std::to_string(d) + ") = " + to_string(s) +
                             " is not an integer");
    t.values.push_back(s.get_num());
  }
  return t;
}

QSeries<ModPrime> log_derivative_mod(long long d, std::uint32_t ell, int N) {
  if (N < 0) throw InputError("series order must be >= 0");
  auto e = eligibility(d, ell);
  if (!e.divides)
    throw HypothesisError("eligibility failed: H_" + std::to_string(d) + " does not divide s_" + std::to_string(ell) +
                          " in F_" + std::to_string(ell) + "[x]");
  PrimeField F(ell);
  auto H = hilbert_class_poly(d);
  auto j = jfunction(N + max_degree(H) + 2, F.zero());
  auto L = QSeries<ModPrime>::zero(F.zero(), 0, N);
  for (const auto& comp : H.components) {
    auto P = comp.poly.map([&](const Integer& x) { return F(x); });
    L = L + component_log_derivative(P, j, N).scaled(F(comp.weight));
  }
  return L;
}

std::string exponents_to_json(const ExponentTable& t) {
  nlohmann::ordered_json doc;
  doc["d"] = t.d;
  doc["N"] = t.N;
  auto arr = nlohmann::json::array();
  for (const auto& v : t.values) arr.push_back(v.get_str());
  doc["A"] = arr;
  return doc.dump();
}

}  // namespace bpe
