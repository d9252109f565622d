#include "sakai/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sakai::cli::main_entry(argc, argv, std::cout, std::cerr); }
