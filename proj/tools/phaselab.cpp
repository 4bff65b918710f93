#include <iostream>

#include "phaselab/cli.hpp"

int main(int argc, char** argv) { return phaselab::cli_main(argc, argv, std::cout, std::cerr); }
