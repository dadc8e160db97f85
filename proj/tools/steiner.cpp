#include <iostream>

#include "cbsteiner/cli.hpp"

int main(int argc, char** argv) { return cbsteiner::run(argc, argv, std::cout, std::cerr); }
