#include <iostream>

#include "lucid/cli/cli.hpp"

int main(int argc, char** argv) { return lucid::gee_main(argc, argv, std::cout, std::cerr); }
