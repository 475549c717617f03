#include <iostream>

#include "sylow/cli/commands.hpp"

int main(int argc, char** argv) { return sylow::cli::run(argc, argv, std::cout, std::cerr); }
