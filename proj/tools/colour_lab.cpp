#include <iostream>

#include "colour_lab/cli.hpp"

int main(int argc, char** argv) { return colour_lab::cli::run(argc, argv, std::cout, std::cerr); }
