#include <iostream>

#include "biofab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return biofab::run_cli(args, std::cout, std::cerr);
}
