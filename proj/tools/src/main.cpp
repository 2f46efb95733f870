#include <iostream>

#include "fmlog_cli/commands.hpp"

int main(int argc, char** argv) { return fmlog::cli::run(argc, argv, std::cout, std::cerr); }
