#include "ratgf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ratgf::run_cli(argc, argv, std::cout, std::cerr); }
