#include <iostream>

#include "catlens/cli.hpp"

int main(int argc, char** argv) { return catlens::run_cli(argc, argv, std::cout, std::cerr); }
