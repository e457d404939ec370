#include <iostream>

#include "cdss/cli.hpp"

int main(int argc, char** argv) { return cdss::run_cli(argc, argv, std::cout, std::cerr); }
