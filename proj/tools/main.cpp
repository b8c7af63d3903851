#include <iostream>
#include <string>
#include <vector>

#include "unistrat/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return unistrat::run_command(args, std::cout);
}
