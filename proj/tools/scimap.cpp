#include <iostream>

#include "scimap/cli.hpp"

int main(int argc, char** argv) { return scimap::cli::run(argc, argv, std::cout, std::cerr); }
