#include <iostream>

#include "csn/cli.hpp"

int main(int argc, char** argv) { return csn::cli::run(argc, argv, std::cout, std::cerr); }
