#include <algorithm>
#include <thread>

#include "bpe/arith/sieve.hpp"
#include "bpe/density/curve.hpp"
#include "bpe/density/table.hpp"
#include "bpe/error.hpp"
#include "bpe/ssforms/eigenbasis.hpp"

namespace bpe {

DensityTable empirical_table(const CongruenceFormula& F, std::uint64_t X, unsigned threads) {
  if (X < 2) throw InputError("empirical bound X must be >= 2");
  const std::uint32_t ell = F.ell;
  const int r = F.r();
  PrimeField K(ell);
  DensityTable T;
  T.ell = ell;
  T.asymptotic = false;
  T.X = X;

  bool curve_backed = r == 1 && F.eigenforms && (ell == 11 || ell == 17 || ell == 19);
  std::vector<QSeries<ModPrime>> forms;
  EllCurve E{};
  if (r == 0) {
    T.source = "constant";
  } else if (curve_backed) {
    E = builtin_curve(ell);
    T.source = "curve " + E.label;
  } else if (X <= kExpansionBound) {
    int need = int(X);
    if (F.eigenforms) {
      forms = eigenbasis(ell, need).forms;
    } else {
      for (const auto& f : F.forms)
        if (f.order() < need) throw CapabilityError("caller-supplied basis is too short for X = " + std::to_string(X));
      forms = F.forms;
    }
    T.source = "expansions";
  } else {
    throw CapabilityError("empirical tables for ell = " + std::to_string(ell) + " are limited to X <= " +
                          std::to_string(kExpansionBound) + " (curve-backed ell: 11, 17, 19)");
  }

  auto primes = sieve(X);
  const auto& ps = primes.primes();
  T.prime_count = ps.size();
  threads = std::max(1U, std::min<unsigned>(threads, 64));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(ell, 0));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      std::size_t lo = ps.size() * w / threads, hi = ps.size() * (w + 1) / threads;
      std::vector<ModPrime> ap(std::size_t(r), K.zero());
      for (std::size_t i = lo; i < hi; ++i) {
        std::uint64_t p = ps[i];
        if (p == ell) continue;
        if (curve_backed)
          ap[0] = K(ec_trace(E, p));
        else
          for (int k = 0; k < r; ++k) ap[std::size_t(k)] = forms[std::size_t(k)][int(p)];
        ++partial[w][formula_eval_prime(F, p, ap).value()];
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  T.counts.assign(ell, 0);
  for (const auto& part : partial)
    for (std::uint32_t t = 0; t < ell; ++t) T.counts[t] += part[t];
  return T;
}

}  // namespace bpe
