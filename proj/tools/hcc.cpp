#include <iostream>

#include "hcc/cli.hpp"

int main(int argc, char** argv) { return hcc::run_cli(argc, argv, std::cout, std::cerr); }
