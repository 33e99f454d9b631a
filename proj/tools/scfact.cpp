#include <iostream>
#include <string>
#include <vector>

#include "scfact/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return scfact::run_cli(args, std::cout, std::cerr);
}
