#include <iostream>

#include "numrad/cli.hpp"

int main(int argc, char** argv) { return numrad::cli::run(argc, argv, std::cout, std::cerr); }
