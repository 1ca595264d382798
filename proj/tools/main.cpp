#include "coembed/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return coembed::run_main(argc, argv, std::cout, std::cerr); }
