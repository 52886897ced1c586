#include <iostream>

#include "dgf/cli.hpp"

int main(int argc, char** argv) { return dgf::cli::run(argc, argv, std::cout, std::cerr); }
