#include <iostream>

#include "winding/cli.hpp"

int main(int argc, char** argv) { return winding::cli_main(argc, argv, std::cout, std::cerr); }
