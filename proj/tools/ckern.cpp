#include <iostream>

#include "chromakernel/cli.hpp"

int main(int argc, char** argv) { return ck::run_cli(argc, argv, std::cout, std::cerr); }
