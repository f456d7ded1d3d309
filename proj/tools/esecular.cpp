#include <iostream>

#include "secular/cli.hpp"

int main(int argc, char** argv) { return secular::cli::main_entry(argc, argv, std::cout, std::cerr); }
