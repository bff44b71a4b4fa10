#include <iostream>

#include "ybme/cli.hpp"

int main(int argc, char** argv) {
    return ybme::run_cli(argc, argv, std::cout, std::cerr);
}
