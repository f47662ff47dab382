#include <iostream>

#include "rposet/cli.hpp"

int main(int argc, char** argv) { return rposet::cli_main(argc, argv, std::cout, std::cerr); }
