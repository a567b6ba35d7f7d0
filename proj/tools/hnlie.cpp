#include <iostream>

#include "hnlie/cli.hpp"

int main(int argc, char** argv) { return hnlie::run(argc, argv, std::cout, std::cerr); }
