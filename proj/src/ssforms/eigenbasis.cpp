#include "bpe/ssforms/eigenbasis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bpe/arith/number_theory.hpp"
#include "bpe/error.hpp"
#include "bpe/ssforms/hecke.hpp"

namespace bpe {

namespace {

using Matrix = std::vector<std::vector<ModPrime>>;

// Row-reduce in place; returns the rank.
int row_reduce(Matrix& m, std::vector<int>* pivots = nullptr) {
  int rows = int(m.size()), cols = rows ? int(m[0].size()) : 0, rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    ModPrime inv = m[rank][c].inverse();
    for (auto& x : m[rank]) x = x * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || is_zero(m[i][c])) continue;
      ModPrime f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

// Basis vector of a one-dimensional kernel.
std::vector<ModPrime> kernel_vector(Matrix m) {
  int n = int(m.size());
  std::vector<int> pivots;
  int rank = row_reduce(m, &pivots);
  if (rank != n - 1) throw ConsistencyError("eigenbasis: eigenspace is not one-dimensional");
  int free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  const ModPrime one = one_like(m[0][0]);
  std::vector<ModPrime> v(std::size_t(n), zero_like(one));
  v[std::size_t(free_col)] = one;
  for (int i = 0; i < rank; ++i) v[std::size_t(pivots[std::size_t(i)])] = -m[std::size_t(i)][std::size_t(free_col)];
  return v;
}

// Delta^a E4^b E6^c from shared factors.
struct MonomialFactory {
  QSeries<ModPrime> delta, e4, e6;
  int N;

  MonomialFactory(int order, const ModPrime& z)
      : delta(bpe::delta(order, z)), e4(eisenstein(4, order, z)), e6(eisenstein(6, order, z)), N(order) {}

  QSeries<ModPrime> operator()(const Monomial& m) const {
    auto out = QSeries<ModPrime>::constant(one_like(delta.zero_value()), N);
    if (m.a) out = out * delta.pow(unsigned(m.a));
    if (m.b) out = out * e4.pow(unsigned(m.b));
    if (m.c) out = out * e6.pow(unsigned(m.c));
    return out.truncated(N);
  }
};

}  // namespace

std::string EigenformBasis::recipe(int i) const {
  std::string s;
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    const ModPrime& c = coordinates[std::size_t(i)][j];
    if (is_zero(c)) continue;
    if (!s.empty()) s += " + ";
    if (c.value() != 1) s += std::to_string(c.value()) + "*";
    s += to_string(monomials[j]);
  }
  return s.empty() ? "0" : s;
}

EigenformBasis eigenbasis(std::uint32_t ell, int N) {
  if (ell < 5 || !is_prime(ell)) throw InputError("eigenbasis: ell must be a prime >= 5");
  if (N < 1) throw InputError("eigenbasis: order must be >= 1");
  PrimeField F(ell);
  const ModPrime z = F.zero();
  const int k = int(ell) + 1;
  EigenformBasis basis{ell, 0, N, monomial_basis(k, true), {}, {}, {}};
  std::reverse(basis.monomials.begin(), basis.monomials.end());
  const int r = int(basis.monomials.size());
  basis.r = r;
  if (r == 0) return basis;

  // T_2 in the monomial basis. Monomial i has valuation i + 1 with leading
  // coefficient 1, so coordinates come from forward substitution on q^1..q^r.
  MonomialFactory small(2 * r, z);
  std::vector<QSeries<ModPrime>> mono;
  for (const auto& m : basis.monomials) mono.push_back(small(m).truncated(r));
  Matrix t2(std::size_t(r), std::vector<ModPrime>(std::size_t(r), z));
  for (int j = 0; j < r; ++j) {
    auto g = hecke_Tp(small(basis.monomials[std::size_t(j)]), 2, k, r);
    for (int i = 0; i < r; ++i) {
      ModPrime x = g[i + 1];
      t2[std::size_t(i)][std::size_t(j)] = x;
      if (!is_zero(x)) g = g - mono[std::size_t(i)].scaled(x);
    }
  }

  std::vector<ModPrime> eigenvalues;
  for (std::uint32_t lam = 0; lam < ell; ++lam) {
    Matrix m = t2;
    for (int i = 0; i < r; ++i) m[std::size_t(i)][std::size_t(i)] = m[std::size_t(i)][std::size_t(i)] - F(lam);
    if (row_reduce(m) < r) eigenvalues.push_back(F(lam));
  }
  if (int(eigenvalues.size()) != r) {
    // Fewer roots in F_ell than the dimension: either a root outside F_ell or
    // a repeated one. In both cases there is no basis of eigenforms over F_ell.
    throw HypothesisError("eigenbasis not defined over F_" + std::to_string(ell) + ": T_2 has " +
                          std::to_string(eigenvalues.size()) + " distinct eigenvalues in F_ell, need " +
                          std::to_string(r));
  }

  MonomialFactory full(N, z);
  std::vector<QSeries<ModPrime>> full_mono;
  for (const auto& m : basis.monomials) full_mono.push_back(full(m));
  for (const auto& lam : eigenvalues) {
    Matrix m = t2;
    for (int i = 0; i < r; ++i) m[std::size_t(i)][std::size_t(i)] = m[std::size_t(i)][std::size_t(i)] - lam;
    auto v = kernel_vector(m);
    if (is_zero(v[0])) throw ConsistencyError("eigenbasis: eigenvector with a(1) = 0");
    ModPrime inv = v[0].inverse();
    for (auto& x : v) x = x * inv;
    auto form = QSeries<ModPrime>::zero(z, 0, N);
    for (int i = 0; i < r; ++i) form = form + full_mono[std::size_t(i)].scaled(v[std::size_t(i)]);
    basis.coordinates.push_back(v);
    basis.t2_eigenvalues.push_back(lam);
    basis.forms.push_back(form);
  }
  return basis;
}

CuspSplit eisenstein_cusp_split(const QSeries<ModPrime>& f, int k) {
  const ModPrime z = f.zero_value();
  if (f.order() < 0) throw TruncationError("eisenstein_cusp_split: constant term unknown");
  ModPrime c0 = f[0];
  auto e = eisenstein(k, f.order(), z);
  auto cusp = f - e.scaled(c0);
  return {c0, cusp};
}

}  // namespace bpe
