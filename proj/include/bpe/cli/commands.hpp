#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bpe/arith/mod_prime.hpp"
#include "bpe/qseries/qseries.hpp"

namespace bpe::cli {

struct RunConfig {
  std::string command;
  long long d = 0;
  long long D = 1;
  std::uint32_t ell = 0;
  long long n = 0;
  std::uint64_t X = 0;  // empirical bound; 0 means asymptotic
  long long dmax = 0;
  std::string format = "text";  // text | json | csv
  std::string cache_dir;
  unsigned threads = 1;
  std::string out;
  std::vector<std::string> basis;  // congruence only; empty means the eigenbasis
};

// Reads a sum of terms like "22*Delta^2*E4^2" into its q-expansion mod ell to
// order N. Every term must be a cusp form of weight ell + 1.
QSeries<ModPrime> parse_form(const std::string& text, std::uint32_t ell, int N);

// Parses argv, runs one command, writes to out (or --out) and diagnostics to
// err. Returns 0 on success, 2 for input or hypothesis failures, 1 for
// internal consistency failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Executes an already validated config; throws the library's exceptions.
std::string execute(const RunConfig& cfg);

std::string version();

}  // namespace bpe::cli
