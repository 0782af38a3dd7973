#include <iostream>
#include <vector>

#include "forest_hopf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return forest_hopf::run_cli(args, std::cout, std::cerr);
}
