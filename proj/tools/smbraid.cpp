#include <iostream>

#include "smbraid/cli.hpp"

int main(int argc, char** argv) { return smbraid::cli::main_entry(argc, argv, std::cout, std::cerr); }
