#include <iostream>

#include "quartic/cli.hpp"

int main(int argc, char** argv) { return quartic::run_cli(argc, argv, std::cout, std::cerr); }
