#include <iostream>

#include "bnet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bnet::run_cli(args, std::cout, std::cerr);
}
