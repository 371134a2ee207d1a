#include <iostream>

#include "rdrd/cli.hpp"

int main(int argc, char** argv) { return rdrd::cli::run(argc, argv, std::cout, std::cerr); }
