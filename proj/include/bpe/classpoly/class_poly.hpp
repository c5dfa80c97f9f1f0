#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bpe/arith/ring.hpp"
#include "bpe/qseries/poly.hpp"

namespace bpe {

struct WeightedComponent {
  Poly<Integer> poly;  // monic, squarefree over Q
  Rational weight;     // 1, 1/2 or 1/3
};

// Hurwitz-weighted Hilbert class polynomial: prod_Q (x - j(alpha_Q))^(1/omega_Q)
// grouped by weight.
struct WeightedClassPoly {
  long long d;
  std::vector<WeightedComponent> components;  // decreasing weight
  Rational h;                                 // sum w * deg = Hurwitz class number
  long precision_used = 0;                    // decimal digits of the last successful attempt
  double residual_bound = 0;                  // max |P(j(alpha_Q))| at verification precision
};

// Direct computation; no caching. Throws ConsistencyError("insufficient
// precision ...") if verification still fails after three doublings.
WeightedClassPoly compute_hilbert_class_poly(long long d);

// Document form: {d, components: [{coeffs: [...], weight: "num/den"}],
// precision_used, residual_bound}; coeffs are decimal strings, constant term first.
std::string class_poly_to_json(const WeightedClassPoly& p);
WeightedClassPoly class_poly_from_json(const std::string& text);

// Memory + optional disk cache keyed by d. Disk writes go to a temporary file
// that is renamed into place.
class ClassPolyStore {
 public:
  ClassPolyStore() = default;
  explicit ClassPolyStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void set_directory(std::optional<std::filesystem::path> dir);
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  WeightedClassPoly get(long long d);

  // Lookups served from memory or disk.
  long hits() const { return hits_; }
  long misses() const { return misses_; }

 private:
  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<long long, WeightedClassPoly> memory_;
  std::atomic<long> hits_{0}, misses_{0};
};

ClassPolyStore& default_class_poly_store();

// default_class_poly_store().get(d)
WeightedClassPoly hilbert_class_poly(long long d);

}  // namespace bpe
