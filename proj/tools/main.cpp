#include <iostream>

#include "klconv/cli.hpp"

int main(int argc, char** argv) { return klconv::run_cli(argc, argv, std::cout, std::cerr); }
