#include "bpe/classpoly/class_poly.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bpe/classpoly/big_float.hpp"
#include "bpe/classpoly/quad_form.hpp"
#include "bpe/classpoly/singular_moduli.hpp"
#include "bpe/error.hpp"
#include "json.hpp"

namespace bpe {

namespace {

constexpr int kMaxRetries = 3;

struct Attempt {
  bool ok = false;
  Poly<Integer> poly{{}, Integer(0)};
  double residual = 0;
  std::string failure;
};

Attempt assemble(const std::vector<QuadForm>& forms, long digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  // prod (x - j_i) with complex coefficients, constant term first
  std::vector<BigComplex> coeffs;
  coeffs.emplace_back(BigFloat(Integer(1), bits), BigFloat(bits));
  for (const auto& q : forms) {
    BigComplex root = singular_modulus(q, digits);
    std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(bits));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - coeffs[i] * root;
    }
    coeffs = std::move(next);
  }
  Attempt out;
  std::vector<Integer> ints;
  const BigFloat tol(1e-6, bits);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Integer z = coeffs[i].re.round();
    BigFloat err = (coeffs[i].re - BigFloat(z, bits)).abs();
    if (!(err < tol) || !(coeffs[i].im.abs() < tol)) {
      out.failure = "coefficient of x^" + std::to_string(i) + " is not within 1e-6 of an integer";
      return out;
    }
    ints.push_back(z);
  }
  out.poly = Poly<Integer>(std::move(ints), Integer(0));

  // Evaluate the rounded polynomial at roots computed 20 digits deeper.
  const long verify_digits = digits + 20;
  const mpfr_prec_t vbits = digits_to_bits(verify_digits + 10);
  const BigFloat limit(1e-3, vbits);
  double worst = 0;
  for (const auto& q : forms) {
    BigComplex root = singular_modulus(q, verify_digits);
    BigComplex acc(vbits);
    const auto& c = out.poly.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * root;
      acc.re = acc.re + BigFloat(c[i], vbits);
    }
    BigFloat res = acc.norm1();
    if (!(res < limit)) {
      out.failure = "residual at j" + to_string(q) + " exceeds 1e-3";
      return out;
    }
    worst = std::max(worst, res.to_double());
  }
  out.ok = true;
  out.residual = worst;
  return out;
}

// Digits needed for the coefficients of prod (x - j(alpha_Q)):
// log10 |j(alpha_Q)| is about pi sqrt(d) / (a ln 10).
long initial_digits(long long d, const std::vector<QuadForm>& forms) {
  double s = 0;
  for (const auto& q : forms) s += std::numbers::pi * std::sqrt(double(d)) / (double(q.a) * std::log(10.0));
  return std::max<long>(30, long(std::ceil(s)) + long(forms.size()) + 20);
}

}  // namespace

WeightedClassPoly compute_hilbert_class_poly(long long d) {
  auto forms = reduced_forms(d);
  WeightedClassPoly out{d, {}, 0, 0, 0};
  for (int omega : {1, 2, 3}) {
    std::vector<QuadForm> group;
    for (const auto& q : forms)
      if (q.omega == omega) group.push_back(q);
    if (group.empty()) continue;
    long digits = initial_digits(d, group);
    Attempt a;
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt, digits *= 2) {
      a = assemble(group, digits);
      if (a.ok) break;
    }
    if (!a.ok)
      throw ConsistencyError("insufficient precision for H_" + std::to_string(d) + " after " +
                             std::to_string(kMaxRetries) + " retries: " + a.failure);
    out.components.push_back({a.poly, Rational(1, omega)});
    out.precision_used = std::max(out.precision_used, digits);
    out.residual_bound = std::max(out.residual_bound, a.residual);
    out.h += Rational(long(group.size()), omega);
  }
  out.h.canonicalize();
  if (out.h != hurwitz_class_number(d)) throw ConsistencyError("class polynomial degrees disagree with h(d)");
  return out;
}

std::string class_poly_to_json(const WeightedClassPoly& p) {
  nlohmann::ordered_json j;
  j["d"] = p.d;
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& c : p.components) {
    nlohmann::ordered_json comp;
    comp["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& x : c.poly.coefficients()) comp["coeffs"].push_back(x.get_str());
    comp["weight"] = to_string(c.weight);
    j["components"].push_back(comp);
  }
  j["precision_used"] = p.precision_used;
  j["residual_bound"] = p.residual_bound;
  return j.dump(2);
}

WeightedClassPoly class_poly_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    WeightedClassPoly p{j.at("d").get<long long>(), {}, 0, j.at("precision_used").get<long>(),
                        j.at("residual_bound").get<double>()};
    for (const auto& comp : j.at("components")) {
      std::vector<Integer> c;
      for (const auto& s : comp.at("coeffs")) c.emplace_back(s.get<std::string>());
      Rational w = parse_rational(comp.at("weight").get<std::string>());
      Poly<Integer> poly(std::move(c), Integer(0));
      p.h += w * Rational(poly.degree());
      p.components.push_back({std::move(poly), w});
    }
    p.h.canonicalize();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed class polynomial document: ") + e.what());
  }
}

void ClassPolyStore::set_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard<std::mutex> lock(mu_);
  dir_ = std::move(dir);
}

WeightedClassPoly ClassPolyStore::get(long long d) {
  require_discriminant(d);
  std::optional<std::filesystem::path> file;
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memory_.find(d); it != memory_.end()) {
      ++hits_;
      return it->second;
    }
    if (dir_) file = *dir_ / ("classpoly_" + std::to_string(d) + ".json");
  }
  if (file && std::filesystem::exists(*file)) {
    std::ifstream in(*file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto p = class_poly_from_json(ss.str());
    // A stale or foreign file is recomputed rather than trusted.
    if (p.d == d && p.h == hurwitz_class_number(d)) {
      ++hits_;
      std::lock_guard<std::mutex> lock(mu_);
      memory_.emplace(d, p);
      return p;
    }
  }
  ++misses_;
  auto p = compute_hilbert_class_poly(d);
  if (file) {
    std::filesystem::create_directories(file->parent_path());
    auto tmp = *file;
    tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&p));
    {
      std::ofstream out(tmp);
      out << class_poly_to_json(p) << "\n";
      if (!out) throw ResourceError("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, *file);
  }
  std::lock_guard<std::mutex> lock(mu_);
  memory_.emplace(d, p);
  return p;
}

ClassPolyStore& default_class_poly_store() {
  static ClassPolyStore store;
  return store;
}

WeightedClassPoly hilbert_class_poly(long long d) { return default_class_poly_store().get(d); }

}  // namespace bpe
