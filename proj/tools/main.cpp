#include <iostream>

#include "hwmt_cli.hpp"

int main(int argc, char** argv) { return hwmt::cli::run(argc, argv, std::cout, std::cerr); }
