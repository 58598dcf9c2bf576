#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return lenscx::cli::run(argc, argv, std::cout); }
