#include <iostream>

#include "arrangetop/cli.hpp"

int main(int argc, char** argv) { return arrangetop::run_cli(argc, argv, std::cout, std::cerr); }
