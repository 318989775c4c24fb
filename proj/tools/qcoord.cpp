#include <iostream>

#include "qcoord/cli.hpp"

int main(int argc, char** argv) { return qcoord::run(argc, argv, std::cout, std::cerr); }
