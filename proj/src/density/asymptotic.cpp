#include "bpe/density/table.hpp"

#include <cstdio>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/density/gl2.hpp"
#include "bpe/error.hpp"
#include "json.hpp"

namespace bpe {

double DensityTable::ratio(std::uint32_t t) const {
  if (t >= ell) throw InputError("residue out of range");
  if (asymptotic) return exact[t].get_d();
  return prime_count == 0 ? 0.0 : double(counts[t]) / double(prime_count);
}

DensityTable asymptotic_table(const CongruenceFormula& F) {
  const std::uint32_t ell = F.ell;
  const int r = F.r();
  if (r > 2) throw CapabilityError("asymptotic densities are implemented for r <= 2, got r = " + std::to_string(r));
  if (r > 0 && !F.eigenforms)
    throw HypothesisError("asymptotic densities need a formula in terms of Hecke eigenforms");
  PrimeField K(ell);
  DensityTable T;
  T.ell = ell;
  T.asymptotic = true;
  T.source = "group";
  std::vector<Integer> weight(ell, 0);  // numerators over a common denominator
  Integer denom = 1;
  const ModPrime base = K(-24) * F.c0;
  std::vector<std::uint64_t> cnt(std::size_t(ell) * ell, 0);  // [a * ell + b]
  if (r > 0)
    for (std::uint32_t a = 0; a < ell; ++a)
      for (std::uint32_t b = 1; b < ell; ++b) cnt[a * ell + b] = charpoly_count(ell, a, b).count;
  auto U = [](std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); };
  if (r == 0) {
    weight[base.value()] = 1;
  } else if (r == 1) {
    denom = U(gl2_order(ell));
    for (std::uint32_t b = 1; b < ell; ++b) {
      ModPrime binv = K(b).inverse();
      for (std::uint32_t a = 0; a < ell; ++a) {
        ModPrime t = base + binv * F.c[0] * (K(a) - K.one());
        weight[t.value()] += U(cnt[a * ell + b]);
      }
    }
  } else {
    // |G| = |GL_2|^2 / (ell - 1)
    denom = U(gl2_order(ell)) * U(gl2_order(ell)) / (ell - 1);
    for (std::uint32_t b = 1; b < ell; ++b) {
      ModPrime binv = K(b).inverse();
      for (std::uint32_t a1 = 0; a1 < ell; ++a1) {
        ModPrime t1 = base + binv * F.c[0] * (K(a1) - K.one());
        for (std::uint32_t a2 = 0; a2 < ell; ++a2) {
          ModPrime t = t1 + binv * F.c[1] * (K(a2) - K.one());
          weight[t.value()] += U(cnt[a1 * ell + b]) * U(cnt[a2 * ell + b]);
        }
      }
    }
  }
  Rational total = 0;
  for (std::uint32_t t = 0; t < ell; ++t) {
    T.exact.push_back(make_rational(weight[t], denom));
    total += T.exact.back();
  }
  if (total != 1) throw ConsistencyError("asymptotic densities sum to " + to_string(total));
  return T;
}

namespace {

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

std::string density_to_csv(const DensityTable& T) {
  std::string out = T.asymptotic ? "t,exact,ratio\n" : "t,count,ratio\n";
  for (std::uint32_t t = 0; t < T.ell; ++t) {
    out += std::to_string(t) + ",";
    out += T.asymptotic ? to_string(T.exact[t]) : std::to_string(T.counts[t]);
    out += "," + fixed4(T.ratio(t)) + "\n";
  }
  return out;
}

std::string density_to_json(const DensityTable& T) {
  nlohmann::ordered_json doc;
  doc["ell"] = T.ell;
  doc["kind"] = T.asymptotic ? "asymptotic" : "empirical";
  doc["source"] = T.source;
  if (!T.asymptotic) {
    doc["X"] = T.X;
    doc["prime_count"] = T.prime_count;
  }
  auto rows = nlohmann::ordered_json::array();
  for (std::uint32_t t = 0; t < T.ell; ++t) {
    nlohmann::ordered_json row;
    row["t"] = t;
    if (T.asymptotic)
      row["exact"] = to_string(T.exact[t]);
    else
      row["count"] = T.counts[t];
    row["ratio"] = fixed4(T.ratio(t));
    rows.push_back(row);
  }
  doc["rows"] = rows;
  return doc.dump();
}

}  // namespace bpe
