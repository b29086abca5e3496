#include <iostream>

#include "idealext/cli.hpp"

int main(int argc, char** argv) { return idealext::cli::run(argc, argv, std::cout, std::cerr); }
