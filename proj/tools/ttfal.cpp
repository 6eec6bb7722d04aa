#include <iostream>

#include "ttfal/cli.hpp"

int main(int argc, char** argv) { return ttfal::cli::run(argc, argv, std::cout, std::cerr); }
