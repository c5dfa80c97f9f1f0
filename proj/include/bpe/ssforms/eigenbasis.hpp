#pragma once

#include <cstdint>
#include <vector>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/qseries/modular_forms.hpp"
#include "bpe/qseries/qseries.hpp"

namespace bpe {

// Normalized Hecke eigenforms of S_{ell+1} reduced mod ell.
struct EigenformBasis {
  std::uint32_t ell;
  int r;      // dim S_{ell+1}
  int order;  // forms are known through q^order
  std::vector<Monomial> monomials;                 // cusp monomials, increasing valuation
  std::vector<std::vector<ModPrime>> coordinates;  // forms[i] = sum coordinates[i][j] * monomials[j]
  std::vector<ModPrime> t2_eigenvalues;            // equal to forms[i][2]
  std::vector<QSeries<ModPrime>> forms;            // a_i(1) = 1

  // "Delta*E4^2*E6^2 + 22*Delta^2*E4^2"
  std::string recipe(int i) const;
};

// Eigenbasis of S_{ell+1} mod ell to order N. Forms are sorted by their T_2
// eigenvalue. Throws HypothesisError("eigenbasis not defined over F_ell") when
// the T_2 characteristic polynomial does not split into distinct linear factors.
EigenformBasis eigenbasis(std::uint32_t ell, int N);

// Mod-ell reduction of an element of M~_{ell+1}: c0 is the constant term and
// cusp = f - c0 E_{ell+1}, which has zero constant term.
struct CuspSplit {
  ModPrime c0;
  QSeries<ModPrime> cusp;
};

CuspSplit eisenstein_cusp_split(const QSeries<ModPrime>& f, int k);

}  // namespace bpe
