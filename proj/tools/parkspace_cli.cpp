#include "parkspace/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return parkspace::cli::run(argc, argv, std::cout, std::cerr); }
