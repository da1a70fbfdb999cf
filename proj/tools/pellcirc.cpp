#include "pellcirc/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return pellcirc::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
