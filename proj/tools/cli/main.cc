#include <iostream>

#include "app.h"

int main(int argc, char** argv) { return fsq::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
