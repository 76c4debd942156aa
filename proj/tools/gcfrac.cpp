#include <iostream>

#include "gcfrac/cli.hpp"

int main(int argc, char** argv) { return gcfrac::cli::main_entry(argc, argv, std::cout, std::cerr); }
