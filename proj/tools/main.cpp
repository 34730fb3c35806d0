#include <iostream>

#include "frolic/cli.hpp"

int main(int argc, char** argv) {
    return frolic::run_cli(argc, argv, std::cout, std::cerr);
}
