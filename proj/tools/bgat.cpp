#include <iostream>
#include <string>
#include <vector>

#include "bgat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bgat::run_cli(args, std::cout, std::cerr);
}
