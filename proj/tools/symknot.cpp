#include <iostream>

#include "symknot/cli/commands.hpp"

int main(int argc, char** argv) { return symknot::cli::run(argc, argv, std::cout, std::cerr); }
