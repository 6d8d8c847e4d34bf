#include <iostream>
#include <string>
#include <vector>

#include "evoc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return evoc::run_cli(args, std::cout, std::cerr);
}
