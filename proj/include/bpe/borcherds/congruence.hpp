#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/qseries/qseries.hpp"

namespace bpe {

// L mod ell = c0 E_{ell+1} + sum c_i f_i, with f_i the basis forms.
struct CongruenceFormula {
  long long d;
  std::uint32_t ell;
  ModPrime c0;
  std::vector<ModPrime> c;
  std::vector<QSeries<ModPrime>> forms;
  std::vector<std::string> labels;  // monomial recipe per form
  bool eigenforms = true;           // false for a caller-supplied basis
  int verified_to = 0;

  int r() const { return int(c.size()); }
};

// Fit against the normalized Hecke eigenbasis of S_{ell+1} mod ell and verify
// the whole series to verify_to (0 selects max(200, 3r)). c0 is checked
// against h(d) mod ell.
CongruenceFormula fit_congruence(long long d, std::uint32_t ell, int verify_to = 0);

// Same fit against arbitrary forms spanning the cusp part. The result carries
// eigenforms = false.
CongruenceFormula fit_congruence_in_basis(long long d, std::uint32_t ell, const std::vector<QSeries<ModPrime>>& forms,
                                          const std::vector<std::string>& labels, int verify_to = 0);

// (1/n) sum_{m | n} nu(n/m) (-24 c0 sigma_1(m) + sum_i c_i a_i(m)) mod ell.
// nu defaults to moebius (D = 1); otherwise nu[k - 1] = nu(k) for k <= n.
// ell | n throws HypothesisError. 1/n is n^(ell - 2).
ModPrime formula_eval(const CongruenceFormula& F, std::uint64_t n, std::span<const ModPrime> nu = {});

// Prime closed form -24 c0 + p^{-1} sum_i c_i (a_i(p) - 1), with the a_i(p)
// supplied by the caller (eigenform coefficients or curve traces).
ModPrime formula_eval_prime(const CongruenceFormula& F, std::uint64_t p, std::span<const ModPrime> ap);

// {"d", "ell", "c0", "c": [...], "basis": [...], "eigenforms", "verified_to"}
std::string congruence_to_json(const CongruenceFormula& F);

}  // namespace bpe
