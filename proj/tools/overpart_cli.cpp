#include <iostream>

#include "overpart/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return overpart::run_cli(args, std::cout, std::cerr);
}
