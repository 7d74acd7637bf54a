#include <iostream>

#include "starcomp/cli/cli.hpp"

int main(int argc, char** argv) { return starcomp::cli::run(argc, argv, std::cout, std::cerr); }
