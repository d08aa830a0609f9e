#include <iostream>
#include <string>
#include <vector>

#include "bnloci/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return bnloci::run_cli(args, std::cout, std::cerr);
}
