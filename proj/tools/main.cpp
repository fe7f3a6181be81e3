#include "starkdirac/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return starkdirac::run(argc, argv, std::cout, std::cerr); }
