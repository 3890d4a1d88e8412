#include <iostream>

#include "gclab/cli/app.hpp"

int main(int argc, char** argv) { return gclab::cli::run_cli(argc, argv, std::cout, std::cerr); }
