#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return desing::cli::run(argc, argv, std::cout, std::cerr); }
