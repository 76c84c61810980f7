#include <iostream>

#include "lucid/cli/cli.hpp"

int main(int argc, char** argv) { return lucid::gipc_main(argc, argv, std::cout, std::cerr); }
