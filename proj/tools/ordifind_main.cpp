#include <iostream>

#include "ordifind/cli.hpp"

int main(int argc, char** argv) { return ordifind::cli_run(argc, argv, std::cout, std::cerr); }
