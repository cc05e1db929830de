// tools/main.cpp — braidcert command-line entry point.

#include <iostream>
#include <string>
#include <vector>

#include "braidcert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return braidcert::cli::run(std::move(args), std::cout, std::cerr);
}
