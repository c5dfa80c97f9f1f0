#include "bpe/cli/commands.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "bpe/arith/number_theory.hpp"
#include "bpe/borcherds/congruence.hpp"
#include "bpe/borcherds/exponents.hpp"
#include "bpe/classpoly/class_poly.hpp"
#include "bpe/classpoly/eligibility.hpp"
#include "bpe/classpoly/quad_form.hpp"
#include "bpe/density/table.hpp"
#include "bpe/error.hpp"
#include "bpe/qseries/modular_forms.hpp"
#include "bpe/ssforms/supersingular.hpp"
#include "json.hpp"

#ifndef BPE_VERSION
#define BPE_VERSION "0.0.0"
#endif

namespace bpe::cli {

using json = nlohmann::ordered_json;

namespace {

json config_json(const RunConfig& c) {
  // threads is deliberately absent: output must not depend on it
  json j;
  j["command"] = c.command;
  if (c.d) j["d"] = c.d;
  j["D"] = c.D;
  if (c.ell) j["ell"] = c.ell;
  if (c.n) j["n"] = c.n;
  if (c.X) j["X"] = c.X;
  if (c.dmax) j["dmax"] = c.dmax;
  if (!c.basis.empty()) j["basis"] = c.basis;
  j["format"] = c.format;
  j["cache_dir"] = c.cache_dir;
  return j;
}

void require_ell(const RunConfig& c) {
  if (c.ell < 5 || !is_prime(c.ell)) throw InputError("--ell must be a prime >= 5, got " + std::to_string(c.ell));
}

void require_d(const RunConfig& c) {
  if (c.d == 0) throw InputError("--d is required");
  require_discriminant(c.d);
}

void require_plain_D(const RunConfig& c) {
  if (c.D != 1)
    throw CapabilityError("D > 1 is supported only through the nu round trip; exact twisted exponents are not available");
}

// Result payload plus its text and csv renderings.
struct Rendered {
  json doc;
  std::string text;
  std::string csv;
};

Rendered cmd_exponents(const RunConfig& c) {
  require_d(c);
  require_plain_D(c);
  if (c.n < 1) throw InputError("--n must be >= 1");
  auto t = exact_exponents(c.d, int(c.n));
  Rendered r;
  r.doc = json::parse(exponents_to_json(t));
  r.csv = "n,A\n";
  for (int n = 1; n <= t.N; ++n) {
    r.text += "A(" + std::to_string(n) + "^2, " + std::to_string(c.d) + ") = " + t(n).get_str() + "\n";
    r.csv += std::to_string(n) + "," + t(n).get_str() + "\n";
  }
  return r;
}

Rendered cmd_congruence(const RunConfig& c) {
  require_d(c);
  require_ell(c);
  require_plain_D(c);
  auto F = [&] {
    if (c.basis.empty()) return fit_congruence(c.d, c.ell, int(c.n));
    // expanded as far as fit_congruence_in_basis verifies
    int N = std::max<int>({int(c.n), 200, 3 * int(c.basis.size())});
    std::vector<QSeries<ModPrime>> forms;
    for (const auto& b : c.basis) forms.push_back(parse_form(b, c.ell, N));
    return fit_congruence_in_basis(c.d, c.ell, forms, c.basis, int(c.n));
  }();
  Rendered r;
  r.doc = json::parse(congruence_to_json(F));
  std::string cs;
  for (std::size_t i = 0; i < F.c.size(); ++i) cs += (i ? ", " : "") + std::to_string(F.c[i].value());
  r.text = "c0 = " + std::to_string(F.c0.value()) + "\nc = [" + cs + "]\n";
  for (int i = 0; i < F.r(); ++i) r.text += "f" + std::to_string(i + 1) + " = " + F.labels[std::size_t(i)] + "\n";
  r.text += "verified to q^" + std::to_string(F.verified_to) + "\n";
  r.csv = "i,c,basis\n0," + std::to_string(F.c0.value()) + ",E_" + std::to_string(c.ell + 1) + "\n";
  for (int i = 0; i < F.r(); ++i)
    r.csv += std::to_string(i + 1) + "," + std::to_string(F.c[std::size_t(i)].value()) + "," + F.labels[std::size_t(i)] + "\n";
  return r;
}

int parse_int(const std::string& s, std::size_t& i) {
  std::size_t j = i;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
  if (j == i || j - i > 9) throw InputError("form: expected a number at position " + std::to_string(i) + " in '" + s + "'");
  int v = std::stoi(s.substr(i, j - i));
  i = j;
  return v;
}

Rendered cmd_density(const RunConfig& c) {
  require_d(c);
  require_ell(c);
  require_plain_D(c);
  auto F = fit_congruence(c.d, c.ell);
  auto T = c.X ? empirical_table(F, c.X, c.threads) : asymptotic_table(F);
  Rendered r;
  r.doc = json::parse(density_to_json(T));
  r.csv = density_to_csv(T);
  for (std::uint32_t t = 0; t < T.ell; ++t) {
    std::string v = T.asymptotic ? to_string(T.exact[t]) : std::to_string(T.counts[t]);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", T.ratio(t));
    r.text += "delta(" + std::to_string(t) + ") = " + v + "  " + buf + "\n";
  }
  if (!T.asymptotic) r.text += "pi(X) = " + std::to_string(T.prime_count) + " (" + T.source + ")\n";
  return r;
}

Rendered cmd_check(const RunConfig& c) {
  require_d(c);
  require_ell(c);
  require_plain_D(c);
  if (c.n < 1) throw InputError("--n must be >= 1");
  auto F = fit_congruence(c.d, c.ell, std::max<int>(int(c.n), 200));
  auto A = exact_exponents(c.d, int(c.n));
  long skipped = 0, compared = 0;
  for (int n = 1; n <= c.n; ++n) {
    if (n % int(c.ell) == 0) {
      ++skipped;
      continue;
    }
    Integer m = A(n) % long(c.ell);
    if (m < 0) m += long(c.ell);
    auto f = formula_eval(F, std::uint64_t(n));
    if (m != long(f.value()))
      throw ConsistencyError("congruence fails at n = " + std::to_string(n) + ": exact " + m.get_str() + ", formula " +
                             std::to_string(f.value()));
    ++compared;
  }
  Rendered r;
  r.doc["status"] = "OK";
  r.doc["indices"] = c.n;
  r.doc["compared"] = compared;
  r.doc["skipped"] = skipped;
  r.text = "OK: " + std::to_string(c.n) + " indices verified (" + std::to_string(skipped) + " skipped, ℓ|n)\n";
  r.csv = "status,indices,compared,skipped\nOK," + std::to_string(c.n) + "," + std::to_string(compared) + "," +
          std::to_string(skipped) + "\n";
  return r;
}

Rendered cmd_supersingular(const RunConfig& c) {
  require_ell(c);
  auto s = supersingular_poly(c.ell);
  Rendered r;
  std::vector<std::uint32_t> coeffs;
  for (const auto& x : s.poly.coefficients()) coeffs.push_back(x.value());
  r.doc["ell"] = c.ell;
  r.doc["poly"] = s.poly.render();
  r.doc["coeffs"] = coeffs;
  r.doc["degree"] = s.poly.degree();
  r.doc["sign"] = s.sign;
  std::string oracle = "not run (ell > 100)";
  if (c.ell <= 100) oracle = supersingular_poly_bruteforce(c.ell) == s.poly ? "agrees" : "DISAGREES";
  r.doc["oracle"] = oracle;
  if (oracle == "DISAGREES") throw ConsistencyError("supersingular polynomial disagrees with the enumeration oracle");
  r.text = "s_" + std::to_string(c.ell) + "(x) = " + s.poly.render() + "\ndegree " + std::to_string(s.poly.degree()) +
           ", oracle " + oracle + "\n";
  r.csv = "power,coeff\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.csv += std::to_string(i) + "," + std::to_string(coeffs[i]) + "\n";
  return r;
}

Rendered cmd_classpoly(const RunConfig& c) {
  require_d(c);
  auto p = hilbert_class_poly(c.d);
  Rendered r;
  r.doc = json::parse(class_poly_to_json(p));
  r.text = "h(" + std::to_string(c.d) + ") = " + to_string(p.h) + "\n";
  r.csv = "component,weight,power,coeff\n";
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    const auto& comp = p.components[i];
    r.text += "[" + to_string(comp.weight) + "] " + comp.poly.render() + "\n";
    const auto& cf = comp.poly.coefficients();
    for (std::size_t k = 0; k < cf.size(); ++k)
      r.csv += std::to_string(i) + "," + to_string(comp.weight) + "," + std::to_string(k) + "," + cf[k].get_str() + "\n";
  }
  return r;
}

Rendered cmd_table2(const RunConfig& c) {
  require_ell(c);
  if (c.dmax < 3) throw InputError("--dmax must be >= 3");
  Rendered r;
  std::vector<long long> flagged;
  json cert = json::array();
  for (long long d = 3; d <= c.dmax; ++d) {
    if (!is_negative_discriminant(d)) continue;
    auto e = eligibility(d, c.ell);
    if (!e.divides) continue;
    flagged.push_back(d);
    json row;
    row["d"] = d;
    row["fundamental"] = is_fundamental_discriminant(-d);
    row["squarefree"] = e.squarefree;
    row["H_mod_ell"] = e.h_mod.render();
    cert.push_back(row);
  }
  r.doc["ell"] = c.ell;
  r.doc["dmax"] = c.dmax;
  r.doc["s_ell"] = supersingular_poly(c.ell).poly.render();
  r.doc["d"] = flagged;
  r.doc["certificates"] = cert;
  r.text = std::to_string(c.ell) + ":";
  r.csv = "d,fundamental,H_mod_ell\n";
  for (std::size_t i = 0; i < flagged.size(); ++i) {
    r.text += (i ? ", " : " ") + std::to_string(flagged[i]);
    r.csv += std::to_string(flagged[i]) + "," + (cert[i]["fundamental"].get<bool>() ? "1" : "0") + "," +
             cert[i]["H_mod_ell"].get<std::string>() + "\n";
  }
  r.text += "\n";
  return r;
}

Rendered dispatch(const RunConfig& c) {
  if (c.command == "exponents") return cmd_exponents(c);
  if (c.command == "congruence") return cmd_congruence(c);
  if (c.command == "density") return cmd_density(c);
  if (c.command == "check") return cmd_check(c);
  if (c.command == "supersingular") return cmd_supersingular(c);
  if (c.command == "classpoly") return cmd_classpoly(c);
  if (c.command == "table2") return cmd_table2(c);
  throw InputError("unknown command " + c.command);
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("BPE_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/bpe";
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/bpe";
  return "";
}

}  // namespace

std::string version() { return BPE_VERSION; }

QSeries<ModPrime> parse_form(const std::string& text, std::uint32_t ell, int N) {
  PrimeField K(ell);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("form: empty expression");
  auto total = QSeries<ModPrime>::constant(K.zero(), N);
  std::size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw InputError("form: expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    long long coeff = 1;
    Monomial m{0, 0, 0};
    bool first = true;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (!first) {
        if (s[i] != '*') throw InputError("form: expected '*' at position " + std::to_string(i) + " in '" + s + "'");
        ++i;
      }
      first = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff *= parse_int(s, i);
        continue;
      }
      int* slot = nullptr;
      for (auto [name, ptr] : {std::pair<const char*, int*>{"Delta", &m.a}, {"E4", &m.b}, {"E6", &m.c}}) {
        std::size_t len = std::char_traits<char>::length(name);
        if (s.compare(i, len, name) == 0) {
          slot = ptr;
          i += len;
          break;
        }
      }
      if (!slot) throw InputError("form: unknown factor at position " + std::to_string(i) + " in '" + s + "'");
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = parse_int(s, i);
      }
      *slot += e;
    }
    if (first) throw InputError("form: empty term in '" + s + "'");
    if (12 * m.a + 4 * m.b + 6 * m.c != int(ell) + 1 || m.a < 1)
      throw InputError("form: term " + to_string(m) + " is not a cusp form of weight " + std::to_string(ell + 1));
    total = total + monomial_series(m, N, K.zero()).scaled(K(sign * coeff));
  }
  return total;
}

std::string execute(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
    throw InputError("--format must be text, json or csv");
  auto& store = default_class_poly_store();
  if (cfg.cache_dir.empty())
    store.set_directory(std::nullopt);
  else
    store.set_directory(std::filesystem::path(cfg.cache_dir));
  long hits0 = store.hits(), misses0 = store.misses();
  Rendered r = dispatch(cfg);
  long hits = store.hits() - hits0, misses = store.misses() - misses0;
  if (cfg.format == "json") {
    json doc;
    doc["tool"] = "bpe";
    doc["version"] = version();
    doc["schema"] = 1;
    doc["config"] = config_json(cfg);
    doc["cache"] = {{"hits", hits}, {"misses", misses}};
    doc["result"] = r.doc;
    return doc.dump(2) + "\n";
  }
  std::string meta = "# bpe " + version() + " " + config_json(cfg).dump() + "\n# cache hits=" + std::to_string(hits) +
                     " misses=" + std::to_string(misses) + "\n";
  return meta + (cfg.format == "csv" ? r.csv : r.text);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.cache_dir = default_cache_dir();
  CLI::App app{"Borcherds product exponents, their congruences mod ell, and density tables"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1, 1);
  app.add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "class polynomial cache directory ('' disables)");
  app.add_option("--threads", cfg.threads, "worker threads for empirical tables")->check(CLI::Range(1u, 64u));
  app.add_option("--out", cfg.out, "write output to this file");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* ex = sub("exponents", "A(n^2, d) for n <= N");
  ex->add_option("--d", cfg.d)->required();
  ex->add_option("--D", cfg.D);
  ex->add_option("--n", cfg.n)->required();
  auto* co = sub("congruence", "fit c0, c1..cr for (d, ell)");
  co->add_option("--d", cfg.d)->required();
  co->add_option("--D", cfg.D);
  co->add_option("--ell", cfg.ell)->required();
  co->add_option("--n", cfg.n, "verify to q^n (default max(200, 3r))");
  co->add_option("--basis", cfg.basis, "fit against these forms instead of the eigenbasis, e.g. 'Delta*E4^2*E6^2 + 22*Delta^2*E4^2'");
  auto* de = sub("density", "asymptotic or empirical distribution of A(p^2, d) mod ell");
  de->add_option("--d", cfg.d)->required();
  de->add_option("--D", cfg.D);
  de->add_option("--ell", cfg.ell)->required();
  de->add_option("--x,--empirical", cfg.X, "count primes p < X");
  auto* ch = sub("check", "exact exponents against the fitted formula for n <= N");
  ch->add_option("--d", cfg.d)->required();
  ch->add_option("--D", cfg.D);
  ch->add_option("--ell", cfg.ell)->required();
  ch->add_option("--n", cfg.n)->required();
  auto* ss = sub("supersingular", "s_ell(x) over F_ell");
  ss->add_option("--ell", cfg.ell)->required();
  auto* cp = sub("classpoly", "weighted Hilbert class polynomial");
  cp->add_option("--d", cfg.d)->required();
  auto* t2 = sub("table2", "d <= dmax with H_d | s_ell mod ell");
  t2->add_option("--ell", cfg.ell)->required();
  t2->add_option("--dmax", cfg.dmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }
  for (auto* s : app.get_subcommands()) cfg.command = s->get_name();

  try {
    std::string text = execute(cfg);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw InputError("cannot open --out file " + cfg.out);
      f << text;
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bpe::cli
