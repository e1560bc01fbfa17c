#include <iostream>

#include "cmon/cli/commands.hpp"

int main(int argc, char** argv) { return cmon::cli::run_cli(argc, argv, std::cout, std::cerr); }
