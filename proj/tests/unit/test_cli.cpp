#include <filesystem>
#include <fstream>
#include <sstream>

#include "bpe/cli/commands.hpp"
#include "bpe/error.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bpe;

namespace {

struct Result {
  int code;
  std::string out, err;
};

const std::string& cache_dir() {
  static const std::string dir = [] {
    auto p = std::filesystem::temp_directory_path() / "bpe_cli_test_cache";
    std::filesystem::remove_all(p);
    return p.string();
  }();
  return dir;
}

Result bpe_run(std::vector<std::string> args) {
  args.insert(args.begin(), {"bpe", "--cache-dir", cache_dir()});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Drops the "# " metadata lines.
std::string body(const std::string& s) {
  std::istringstream in(s);
  std::string line, r;
  while (std::getline(in, line))
    if (line.rfind("# ", 0) != 0) r += line + "\n";
  return r;
}

}  // namespace

TEST_CASE("exponents") {
  auto r = bpe_run({"exponents", "--d", "4", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(body(r.out) == "A(1^2, 4) = 492\nA(2^2, 4) = 143376\nA(3^2, 4) = 51180012\n");
  r = bpe_run({"exponents", "--d", "3", "--n", "1"});
  CHECK(body(r.out) == "A(1^2, 3) = -248\n");
  r = bpe_run({"exponents", "--d", "5", "--n", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not a discriminant") != std::string::npos);
  r = bpe_run({"exponents", "--d", "4", "--n", "1", "--D", "5"});
  CHECK(r.code == 2);
}

TEST_CASE("congruence documents") {
  auto r = bpe_run({"--format", "json", "congruence", "--d", "4", "--ell", "11"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tool"] == "bpe");
  CHECK(j["version"] == cli::version());
  CHECK(j["config"]["d"] == 4);
  CHECK(j["config"]["ell"] == 11);
  CHECK(j["cache"].contains("hits"));
  CHECK(j["result"]["c0"] == 6);
  CHECK(j["result"]["c"] == nlohmann::json::array({9}));

  r = bpe_run({"congruence", "--d", "4", "--ell", "13"});
  CHECK(r.code == 2);
  CHECK(r.err.find("eligibility failed") != std::string::npos);

  r = bpe_run({"--format", "json", "congruence", "--d", "20", "--ell", "31", "--basis",
               "Delta*E4^2*E6^2 + 22*Delta^2*E4^2", "--basis", "Delta*E4^2*E6^2 + 19*Delta^2*E4^2"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["c0"] == 2);
  CHECK(j["result"]["c"] == nlohmann::json::array({14, 9}));
  CHECK(j["result"]["eigenforms"] == false);

  r = bpe_run({"congruence", "--d", "20", "--ell", "31", "--basis", "E4^8"});
  CHECK(r.code == 2);
}

TEST_CASE("parse_form") {
  auto f = cli::parse_form("Delta", 11, 10);
  CHECK(f[1].value() == 1);
  CHECK(f[2].value() == 9);  // -24 mod 11
  auto g = cli::parse_form("2*Delta*E4^2*E6^2 - Delta^2*E4^2", 31, 5);
  CHECK(g[1].value() == 2);
  CHECK_THROWS_AS(cli::parse_form("Delta*", 11, 5), InputError);
  CHECK_THROWS_AS(cli::parse_form("Delta^2", 11, 5), InputError);
  CHECK_THROWS_AS(cli::parse_form("Eta", 11, 5), InputError);
  CHECK_THROWS_AS(cli::parse_form("", 11, 5), InputError);
}

TEST_CASE("density output and thread independence") {
  auto r = bpe_run({"--format", "csv", "density", "--d", "4", "--ell", "11"});
  REQUIRE(r.code == 0);
  CHECK(body(r.out).rfind("t,exact,ratio\n0,9/100,0.0900\n", 0) == 0);
  CHECK(r.out.find("\n8,119/1200,0.0992\n") != std::string::npos);
  auto a = bpe_run({"--threads", "1", "--format", "json", "density", "--d", "4", "--ell", "11", "--x", "30000"});
  auto b = bpe_run({"--threads", "3", "--format", "json", "density", "--d", "4", "--ell", "11", "--empirical", "30000"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  r = bpe_run({"density", "--d", "20", "--ell", "31", "--x", "1000000"});
  CHECK(r.code == 2);
}

TEST_CASE("check, supersingular, classpoly, table2") {
  auto r = bpe_run({"check", "--d", "4", "--ell", "11", "--n", "300"});
  CHECK(r.code == 0);
  CHECK(body(r.out) == "OK: 300 indices verified (27 skipped, ℓ|n)\n");
  r = bpe_run({"supersingular", "--ell", "31"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s_31(x) = x^3 + ") != std::string::npos);
  CHECK(r.out.find("oracle agrees") != std::string::npos);
  r = bpe_run({"--format", "json", "classpoly", "--d", "20"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["components"][0]["coeffs"][0] == "-681472000");
  r = bpe_run({"--format", "json", "table2", "--ell", "11", "--dmax", "300"});
  j = nlohmann::json::parse(r.out);
  auto ds = j["result"]["d"].get<std::vector<long long>>();
  for (long long d : {3, 4, 11, 12, 15, 20, 67, 115, 148, 267})
    CHECK(std::find(ds.begin(), ds.end(), d) != ds.end());
}

TEST_CASE("flags and exit codes") {
  CHECK(bpe_run({}).code == 2);
  CHECK(bpe_run({"--format", "xml", "classpoly", "--d", "4"}).code == 2);
  CHECK(bpe_run({"supersingular", "--ell", "9"}).code == 2);
  CHECK(bpe_run({"table2", "--ell", "11"}).code == 2);
  auto v = bpe_run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(cli::version()) != std::string::npos);

  auto path = std::filesystem::temp_directory_path() / "bpe_cli_out.txt";
  std::filesystem::remove(path);
  auto r = bpe_run({"--out", path.string(), "classpoly", "--d", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("x + 3375") != std::string::npos);
  std::filesystem::remove(path);

  // the second run of the same command is served from the cache
  bpe_run({"classpoly", "--d", "23"});
  auto again = bpe_run({"--format", "json", "classpoly", "--d", "23"});
  CHECK(nlohmann::json::parse(again.out)["cache"]["hits"] == 1);
}
