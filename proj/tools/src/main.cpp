#include <iostream>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
    std::vector<const char*> args(argv, argv + argc);
    return strata::cli::run_command(args, std::cout, std::cerr);
}
