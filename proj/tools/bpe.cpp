#include <iostream>

#include "bpe/cli/commands.hpp"

int main(int argc, char** argv) { return bpe::cli::run(argc, argv, std::cout, std::cerr); }
