#include <iostream>

#include "heatplate/cli.hpp"

int main(int argc, char** argv) {
    return heatplate::cli_main(argc, argv, std::cout, std::cerr);
}
