#include <iostream>

#include "quokka/cli.hpp"

int main(int argc, char** argv) { return quokka::cli::run(argc, argv, std::cout, std::cerr); }
