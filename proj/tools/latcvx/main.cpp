#include <iostream>

#include "latcvx/commands.hpp"

int main(int argc, char** argv) { return latcvx::cli::run(argc, argv, std::cout, std::cerr); }
