#include "bpe/borcherds/congruence.hpp"

#include "bpe/arith/number_theory.hpp"
#include "bpe/borcherds/exponents.hpp"
#include "bpe/classpoly/quad_form.hpp"
#include "bpe/error.hpp"
#include "bpe/ssforms/eigenbasis.hpp"
#include "json.hpp"

namespace bpe {

namespace {

// Solve A x = b over F_ell by Gauss-Jordan; throws DomainError when singular.
std::vector<ModPrime> solve(std::vector<std::vector<ModPrime>> A, std::vector<ModPrime> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(A[piv][col])) ++piv;
    if (piv == n) throw DomainError("singular linear system: basis forms are dependent on q^1..q^" + std::to_string(n));
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    ModPrime inv = A[col][col].inverse();
    for (auto& x : A[col]) x = x * inv;
    b[col] = b[col] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(A[i][col])) continue;
      ModPrime f = A[i][col];
      for (std::size_t k = 0; k < n; ++k) A[i][k] = A[i][k] - f * A[col][k];
      b[i] = b[i] - f * b[col];
    }
  }
  return b;
}

int default_verify(int r, int verify_to) { return verify_to > 0 ? verify_to : std::max(200, 3 * r); }

}  // namespace

CongruenceFormula fit_congruence_in_basis(long long d, std::uint32_t ell, const std::vector<QSeries<ModPrime>>& forms,
                                          const std::vector<std::string>& labels, int verify_to) {
  const int r = int(forms.size());
  const int N = default_verify(r, verify_to);
  if (labels.size() != forms.size()) throw InputError("one label per basis form is required");
  for (const auto& f : forms)
    if (f.order() < N) throw TruncationError("basis form known only to q^" + std::to_string(f.order()));
  PrimeField F(ell);
  auto L = log_derivative_mod(d, ell, N);
  auto split = eisenstein_cusp_split(L, int(ell) + 1);
  ModPrime h = F(hurwitz_class_number(d));
  if (split.c0 != h)
    throw ConsistencyError("c0 = " + to_string(split.c0) + " but h(d) = " + to_string(h) + " mod " + std::to_string(ell));

  std::vector<std::vector<ModPrime>> A(std::size_t(r), std::vector<ModPrime>(std::size_t(r), F.zero()));
  std::vector<ModPrime> rhs(std::size_t(r), F.zero());
  for (int n = 1; n <= r; ++n) {
    for (int i = 0; i < r; ++i) A[std::size_t(n - 1)][std::size_t(i)] = forms[std::size_t(i)][n];
    rhs[std::size_t(n - 1)] = split.cusp[n];
  }
  auto c = solve(A, rhs);

  for (int n = 0; n <= N; ++n) {
    ModPrime v = F.zero();
    for (int i = 0; i < r; ++i) v = v + c[std::size_t(i)] * forms[std::size_t(i)][n];
    if (v != split.cusp[n])
      throw ConsistencyError("congruence fit fails at q^" + std::to_string(n) + " (d = " + std::to_string(d) +
                             ", ell = " + std::to_string(ell) + ")");
  }
  CongruenceFormula out{d, ell, split.c0, std::move(c), forms, labels, false, N};
  return out;
}

CongruenceFormula fit_congruence(long long d, std::uint32_t ell, int verify_to) {
  PrimeField F(ell);
  int r = cusp_dimension(int(ell) + 1);
  int N = default_verify(r, verify_to);
  // Checked first so an ineligible pair is reported before the eigenbasis.
  log_derivative_mod(d, ell, 0);
  auto basis = eigenbasis(ell, N);
  std::vector<std::string> labels;
  for (int i = 0; i < basis.r; ++i) labels.push_back(basis.recipe(i));
  auto out = fit_congruence_in_basis(d, ell, basis.forms, labels, N);
  out.eigenforms = true;
  return out;
}

ModPrime formula_eval(const CongruenceFormula& F, std::uint64_t n, std::span<const ModPrime> nu) {
  PrimeField K(F.ell);
  if (n == 0) throw InputError("formula_eval: n must be >= 1");
  if (n % F.ell == 0) throw HypothesisError("theorem hypothesis ell does not divide n violated: n = " + std::to_string(n));
  if (!nu.empty() && nu.size() < n) throw TruncationError("nu known only to " + std::to_string(nu.size()));
  for (const auto& f : F.forms)
    if (std::uint64_t(f.order()) < n) throw TruncationError("basis forms known only to q^" + std::to_string(f.order()));
  ModPrime m24c0 = K(-24) * F.c0, sum = K.zero();
  for (auto m : divisors(n)) {
    std::uint64_t k = n / m;
    ModPrime w = nu.empty() ? K(moebius(k)) : nu[k - 1];
    if (is_zero(w)) continue;
    ModPrime g = m24c0 * K(sigma(1, m));
    for (int i = 0; i < F.r(); ++i) g = g + F.c[std::size_t(i)] * F.forms[std::size_t(i)][int(m)];
    sum = sum + w * g;
  }
  return sum * K(static_cast<long long>(n % F.ell)).pow(F.ell - 2);
}

ModPrime formula_eval_prime(const CongruenceFormula& F, std::uint64_t p, std::span<const ModPrime> ap) {
  PrimeField K(F.ell);
  if (p % F.ell == 0) throw HypothesisError("theorem hypothesis ell does not divide n violated: n = " + std::to_string(p));
  if (ap.size() != F.c.size()) throw InputError("one a_i(p) per basis form is required");
  ModPrime s = K.zero();
  for (std::size_t i = 0; i < ap.size(); ++i) s = s + F.c[i] * (ap[i] - K.one());
  return K(-24) * F.c0 + s * K(static_cast<long long>(p % F.ell)).pow(F.ell - 2);
}

std::string congruence_to_json(const CongruenceFormula& F) {
  nlohmann::ordered_json doc;
  doc["d"] = F.d;
  doc["ell"] = F.ell;
  doc["c0"] = F.c0.value();
  auto c = nlohmann::json::array();
  for (const auto& x : F.c) c.push_back(x.value());
  doc["c"] = c;
  doc["basis"] = F.labels;
  doc["eigenforms"] = F.eigenforms;
  doc["verified_to"] = F.verified_to;
  return doc.dump();
}

}  // namespace bpe
