#include <iostream>
#include <string>
#include <vector>

#include "algrad/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return algrad::run_cli(args, std::cout, std::cerr);
}
