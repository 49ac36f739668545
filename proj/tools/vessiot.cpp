#include <iostream>

#include "vessiot/cli.hpp"

int main(int argc, char** argv) { return vessiot::run(argc, argv, std::cout, std::cerr); }
