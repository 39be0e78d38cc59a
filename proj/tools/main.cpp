#include <iostream>

#include "bergman/cli.hpp"

int main(int argc, char** argv) { return bergman::cli_main(argc, argv, std::cout, std::cerr); }
