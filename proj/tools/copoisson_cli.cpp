#include <copoisson/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return copoisson::cli::run(argc, argv, std::cout, std::cerr); }
