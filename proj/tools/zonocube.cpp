#include <iostream>

#include "zonocube/cli.hpp"

int main(int argc, char** argv) { return zonocube::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
