#include <iostream>

#include "eulerian/cli.hpp"

int main(int argc, char** argv) { return eulerian::cli::run(argc, argv, std::cout, std::cerr); }
