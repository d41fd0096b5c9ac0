#include <iostream>

#include "simsim/cli.hpp"

int main(int argc, char** argv) {
    return simsim::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
