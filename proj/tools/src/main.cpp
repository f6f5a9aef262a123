#include <iostream>
#include <string>
#include <vector>

#include "balldep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return balldep::cli::run(args, std::cout, std::cerr);
}
