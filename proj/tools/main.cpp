#include "mubound/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mubound::run_cli(argc, argv, std::cout, std::cerr); }
