#include <iostream>

#include "poisson/cli.hpp"

int main(int argc, char** argv) { return poisson::cli::run(argc, argv, std::cout, std::cerr); }
