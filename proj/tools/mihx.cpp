#include <iostream>

#include "mihx/cli/commands.hpp"

int main(int argc, char** argv) { return mihx::cli::run_cli(argc, argv, std::cout, std::cerr); }
