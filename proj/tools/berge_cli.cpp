#include <iostream>

#include "berge/cli/commands.hpp"

int main(int argc, char** argv) { return berge::cli::run(argc, argv, std::cout, std::cerr); }
