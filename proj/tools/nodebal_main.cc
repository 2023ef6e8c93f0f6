#include <iostream>

#include "nodebal/cli.h"

int main(int argc, char** argv) { return nodebal::run_cli(argc, argv, std::cout, std::cerr); }
