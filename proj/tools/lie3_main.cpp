#include "lie3/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lie3::run(args, std::cout, std::cerr);
}
