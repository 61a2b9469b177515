#include <iostream>
#include <vector>

#include "liecoh/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return liecoh::run_command(args, std::cin, std::cout, std::cerr);
}
