#include <iostream>

#include "qdirac/cli.hpp"

int main(int argc, char** argv) { return qdirac::cli::run(argc, argv, std::cout, std::cerr); }
