#include <iostream>

#include "robbo/cli.hpp"

int main(int argc, char** argv) { return robbo::cli::dispatch(argc, argv, std::cout, std::cerr); }
