#include <iostream>

#include "argbound_cli/cli.hpp"

int main(int argc, char** argv) { return argbound::cli::run(argc, argv, std::cout, std::cerr); }
