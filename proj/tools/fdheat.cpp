#include "fdheat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fdheat::cli::run_cli(argc, argv, std::cout, std::cerr); }
